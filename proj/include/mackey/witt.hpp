#pragma once

// Classical big Witt vectors W_S(R) for divisor-closed truncation sets S and
// R = Z or Z/m.
//
// Over Z everything is computed through ghost components. Over Z/m the
// universal addition/multiplication/Frobenius polynomials are derived once
// over Z by solving the ghost equations symbolically, then reduced mod m.

#include "mackey/fgab.hpp"
#include "mackey/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

namespace mackey {

class TruncationSet {
public:
  TruncationSet() = default;

  explicit TruncationSet(std::vector<long> elements) : elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    for (long d : elems_) {
      if (d < 1) throw InvalidArgument("truncation sets contain positive integers only");
      for (long e : divisors(d))
        if (!contains(e)) throw InvalidArgument("truncation set is not closed under divisors");
    }
  }

  /// <n>: the divisors of n.
  static TruncationSet divisors_of(long n) {
    if (n < 1) throw InvalidArgument("<n> needs n >= 1");
    return TruncationSet(divisors(n));
  }

  const std::vector<long>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool contains(long d) const { return std::binary_search(elems_.begin(), elems_.end(), d); }
  long max() const { return elems_.empty() ? 0 : elems_.back(); }

  std::size_t index(long d) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), d);
    if (it == elems_.end() || *it != d) throw InvalidArgument("index outside the truncation set");
    return static_cast<std::size_t>(it - elems_.begin());
  }

  /// S/r = {d : r d in S}.
  TruncationSet quotient(long r) const {
    std::vector<long> out;
    for (long d : elems_)
      if (d % r == 0) out.push_back(d / r);
    return TruncationSet(out);
  }

  friend bool operator==(const TruncationSet&, const TruncationSet&) = default;

private:
  std::vector<long> elems_;
};

class BaseRing {
public:
  enum class Kind { Integers, IntegersMod };

  static BaseRing integers() { return BaseRing(Kind::Integers, 0); }
  static BaseRing integers_mod(long m) {
    if (m < 2) throw InvalidArgument("Z/m needs m >= 2");
    return BaseRing(Kind::IntegersMod, m);
  }

  /// Accepts "Z", "Z/m" and "F_p" (p prime).
  static BaseRing parse(const std::string& s) {
    auto number = [&](const std::string& digits) -> long {
      if (digits.empty() || digits.size() > 9 ||
          !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw InvalidArgument("bad ring '" + s + "'");
      return std::stol(digits);
    };
    if (s == "Z") return integers();
    if (s.rfind("Z/", 0) == 0) return integers_mod(number(s.substr(2)));
    if (s.rfind("F_", 0) == 0) {
      long p = number(s.substr(2));
      if (!is_prime(p)) throw InvalidArgument("F_p needs a prime p, got " + s);
      return integers_mod(p);
    }
    throw InvalidArgument("unsupported ring '" + s + "' (expected Z, Z/m or F_p)");
  }

  Kind kind() const { return kind_; }
  bool has_torsion() const { return kind_ == Kind::IntegersMod; }
  long modulus() const { return m_; }
  /// Characteristic as an integer (0 for Z).
  Int characteristic() const { return Int(m_); }

  Int reduce(const Int& x) const { return has_torsion() ? mod(x, Int(m_)) : x; }

  std::string name() const {
    if (!has_torsion()) return "Z";
    if (is_prime(m_)) return "F_" + std::to_string(m_);
    return "Z/" + std::to_string(m_);
  }

  friend bool operator==(const BaseRing&, const BaseRing&) = default;

private:
  BaseRing(Kind k, long m) : kind_(k), m_(m) {}
  Kind kind_;
  long m_;
};

class WittVector {
public:
  WittVector(TruncationSet s, BaseRing r) : s_(std::move(s)), r_(r), comps_(s_.size(), Int(0)) {}

  WittVector(TruncationSet s, BaseRing r, Vec components)
      : s_(std::move(s)), r_(r), comps_(std::move(components)) {
    if (comps_.size() != s_.size())
      throw InvalidArgument("component count does not match the truncation set");
    for (auto& c : comps_) c = r_.reduce(c);
  }

  const TruncationSet& truncation() const { return s_; }
  const BaseRing& ring() const { return r_; }
  const Vec& components() const { return comps_; }
  const Int& operator[](long d) const { return comps_[s_.index(d)]; }

  friend bool operator==(const WittVector&, const WittVector&) = default;

private:
  TruncationSet s_;
  BaseRing r_;
  Vec comps_;
};

inline std::ostream& operator<<(std::ostream& os, const WittVector& w) {
  os << "(";
  for (std::size_t i = 0; i < w.components().size(); ++i) os << (i ? ", " : "") << w.components()[i];
  return os << ")";
}

// ---------------------------------------------------------------------------
// Universal polynomials

enum class WittOp { Add, Mul, Frobenius };

namespace detail {

// variable numbering: first argument's e-th component is 2e, second's 2e+1
inline Polynomial witt_var(long e, int side) {
  return Polynomial::variable(static_cast<unsigned>(2 * e + side));
}

inline Polynomial ghost_poly(long d, int side) {
  Polynomial g;
  for (long e : divisors(d)) g += Int(e) * witt_var(e, side).pow(static_cast<unsigned>(d / e));
  return g;
}

class PolynomialCache {
public:
  static PolynomialCache& instance() {
    static PolynomialCache cache;
    return cache;
  }

  const Polynomial& get(WittOp op, long d, long r) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto key = std::make_tuple(static_cast<int>(op), d, r);
    auto it = polys_.find(key);
    if (it != polys_.end()) return *it->second;
    Polynomial target;
    switch (op) {
      case WittOp::Add: target = ghost_poly(d, 0) + ghost_poly(d, 1); break;
      case WittOp::Mul: target = ghost_poly(d, 0) * ghost_poly(d, 1); break;
      case WittOp::Frobenius: target = ghost_poly(r * d, 0); break;
    }
    for (long e : divisors(d)) {
      if (e == d) continue;
      target -= Int(e) * get(op, e, r).pow(static_cast<unsigned>(d / e));
    }
    auto p = std::make_unique<Polynomial>(target.divexact(Int(d)));
    const Polynomial& ref = *p;
    polys_.emplace(key, std::move(p));
    return ref;
  }

  const ModularPolynomial& get_mod(WittOp op, long d, long r, long m) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto key = std::make_tuple(static_cast<int>(op), d, r, m);
    auto it = mod_polys_.find(key);
    if (it != mod_polys_.end()) return *it->second;
    auto p = std::make_unique<ModularPolynomial>(get(op, d, r), m);
    const ModularPolynomial& ref = *p;
    mod_polys_.emplace(key, std::move(p));
    return ref;
  }

private:
  std::recursive_mutex mu_;
  std::map<std::tuple<int, long, long>, std::unique_ptr<Polynomial>> polys_;
  std::map<std::tuple<int, long, long, long>, std::unique_ptr<ModularPolynomial>> mod_polys_;
};

}  // namespace detail

/// The universal polynomial giving component d of a+b, a*b, or F_r(a).
/// Variables: component e of the first argument is variable 2e, of the
/// second argument 2e+1.
inline const Polynomial& universal_polynomial(WittOp op, long d, long r = 1) {
  return detail::PolynomialCache::instance().get(op, d, r);
}

// ---------------------------------------------------------------------------
// Ghost map and ring operations

/// gh_d(w) = sum over e | d of e * w_e^(d/e), for d in S.
inline Vec ghost(const WittVector& w) {
  if (w.ring().has_torsion())
    throw InvalidArgument("ghost components are only used over Z (not injective with torsion)");
  const auto& s = w.truncation().elements();
  Vec g(s.size(), Int(0));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (long e : divisors(s[i])) g[i] += Int(e) * pow(w[e], static_cast<unsigned long>(s[i] / e));
  return g;
}

/// The Witt vector over Z with the given ghost components.
inline WittVector from_ghost(const TruncationSet& s, const Vec& gh) {
  const auto& el = s.elements();
  Vec a(el.size(), Int(0));
  for (std::size_t i = 0; i < el.size(); ++i) {
    Int rest = gh[i];
    for (long e : divisors(el[i]))
      if (e != el[i]) rest -= Int(e) * pow(a[s.index(e)], static_cast<unsigned long>(el[i] / e));
    a[i] = divexact(rest, Int(el[i]));
  }
  return WittVector(s, BaseRing::integers(), a);
}

inline bool has_ghost_preimage(const TruncationSet& s, const Vec& gh) {
  try {
    from_ghost(s, gh);
    return true;
  } catch (const InvariantViolation&) {
    return false;
  }
}

namespace detail {

inline void check_compatible(const WittVector& a, const WittVector& b) {
  if (!(a.truncation() == b.truncation()) || !(a.ring() == b.ring()))
    throw InvalidArgument("Witt vectors over different truncation sets or rings");
}

inline std::vector<std::int64_t> modular_values(const WittVector& a, const WittVector* b,
                                                long max_index) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(2 * max_index + 2), 0);
  const auto& el = a.truncation().elements();
  for (std::size_t i = 0; i < el.size(); ++i) {
    v[static_cast<std::size_t>(2 * el[i])] = a.components()[i].get_si();
    if (b) v[static_cast<std::size_t>(2 * el[i] + 1)] = b->components()[i].get_si();
  }
  return v;
}

inline WittVector binary_op(WittOp op, const WittVector& a, const WittVector& b) {
  check_compatible(a, b);
  const TruncationSet& s = a.truncation();
  if (!a.ring().has_torsion()) {
    Vec ga = ghost(a), gb = ghost(b);
    for (std::size_t i = 0; i < ga.size(); ++i) ga[i] = op == WittOp::Add ? Int(ga[i] + gb[i]) : Int(ga[i] * gb[i]);
    return from_ghost(s, ga);
  }
  const long m = a.ring().modulus();
  auto values = modular_values(a, &b, s.max());
  Vec out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    out[i] = static_cast<long>(
        PolynomialCache::instance().get_mod(op, s.elements()[i], 1, m).eval(values));
  return WittVector(s, a.ring(), out);
}

}  // namespace detail

inline WittVector witt_add(const WittVector& a, const WittVector& b) {
  return detail::binary_op(WittOp::Add, a, b);
}

inline WittVector witt_mul(const WittVector& a, const WittVector& b) {
  return detail::binary_op(WittOp::Mul, a, b);
}

inline WittVector witt_zero(const TruncationSet& s, const BaseRing& r) { return WittVector(s, r); }

/// Teichmüller lift [x] = (x, 0, ..., 0).
inline WittVector teichmuller(const Int& x, const TruncationSet& s, const BaseRing& r) {
  Vec c(s.size(), Int(0));
  if (!c.empty()) c[0] = x;
  return WittVector(s, r, c);
}

inline WittVector witt_one(const TruncationSet& s, const BaseRing& r) { return teichmuller(1, s, r); }

/// F_r : W_S(R) -> W_{S/r}(R), characterized by gh_d(F_r w) = gh_{rd}(w).
inline WittVector frobenius(long r, const WittVector& w) {
  if (r < 1) throw InvalidArgument("Frobenius index must be positive");
  TruncationSet q = w.truncation().quotient(r);
  if (!w.ring().has_torsion()) {
    Vec gw = ghost(w), g(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) g[i] = gw[w.truncation().index(r * q.elements()[i])];
    return from_ghost(q, g);
  }
  const long m = w.ring().modulus();
  auto values = detail::modular_values(w, nullptr, w.truncation().max());
  Vec out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    out[i] = static_cast<long>(
        detail::PolynomialCache::instance().get_mod(WittOp::Frobenius, q.elements()[i], r, m).eval(values));
  return WittVector(q, w.ring(), out);
}

/// V_r : W_{S/r}(R) -> W_S(R), (V_r w)_d = w_{d/r} when r | d and 0 otherwise.
inline WittVector verschiebung(long r, const WittVector& w, const TruncationSet& s) {
  if (r < 1) throw InvalidArgument("Verschiebung index must be positive");
  if (!(s.quotient(r) == w.truncation()))
    throw InvalidArgument("Verschiebung source must be the truncation set S/r");
  Vec out(s.size(), Int(0));
  for (std::size_t i = 0; i < s.size(); ++i) {
    long d = s.elements()[i];
    if (d % r == 0) out[i] = w[d / r];
  }
  return WittVector(s, w.ring(), out);
}

// ---------------------------------------------------------------------------
// Additive structure of W_S(Z/m) by enumeration

/// W_S(Z/m) as an abelian group presented on the generators V_e(1), e in S
/// (the Witt vectors with a single component 1 at position e), together
/// with a dictionary from component vectors to generator coordinates.
struct WittEnumeration {
  TruncationSet truncation;
  BaseRing ring = BaseRing::integers();
  FgAbGroup group;
  std::map<std::vector<std::int64_t>, Vec> coordinates;

  Vec coords_of(const WittVector& w) const {
    std::vector<std::int64_t> key;
    for (const auto& c : w.components()) key.push_back(c.get_si());
    auto it = coordinates.find(key);
    if (it == coordinates.end()) throw InvariantViolation("Witt vector missing from enumeration");
    return it->second;
  }

  /// The Witt vector with generator coordinates c.
  WittVector element(const Vec& c) const {
    WittVector acc = witt_zero(truncation, ring);
    for (std::size_t i = 0; i < c.size(); ++i) {
      Int k = mod(c[i], group.order());
      WittVector g(truncation, ring, unit_vec(truncation.size(), i));
      for (Int j = 0; j < k; ++j) acc = witt_add(acc, g);
    }
    return acc;
  }
};

inline WittEnumeration enumerate_witt_group(const TruncationSet& s, const BaseRing& r) {
  if (!r.has_torsion()) throw InvalidArgument("enumeration needs a finite base ring");
  const std::size_t k = s.size();
  WittEnumeration out{s, r, FgAbGroup(), {}};
  std::vector<WittVector> gens;
  for (std::size_t i = 0; i < k; ++i) gens.emplace_back(s, r, unit_vec(k, i));
  auto key_of = [](const WittVector& w) {
    std::vector<std::int64_t> key;
    for (const auto& c : w.components()) key.push_back(c.get_si());
    return key;
  };
  Lattice rel(k);
  std::deque<WittVector> queue;
  WittVector zero = witt_zero(s, r);
  out.coordinates[key_of(zero)] = zero_vec(k);
  queue.push_back(zero);
  while (!queue.empty()) {
    WittVector x = queue.front();
    queue.pop_front();
    Vec cx = out.coordinates.at(key_of(x));
    for (std::size_t i = 0; i < k; ++i) {
      WittVector y = witt_add(x, gens[i]);
      auto key = key_of(y);
      Vec cy = cx;
      cy[i] += 1;
      auto it = out.coordinates.find(key);
      if (it == out.coordinates.end()) {
        out.coordinates.emplace(std::move(key), cy);
        queue.push_back(std::move(y));
      } else {
        Vec d = cy;
        for (std::size_t j = 0; j < k; ++j) d[j] -= it->second[j];
        rel.insert(d);
      }
    }
  }
  out.group = FgAbGroup(k, rel.basis_matrix());
  Int expected = pow(Int(r.modulus()), static_cast<unsigned long>(k));
  if (Int(static_cast<long>(out.coordinates.size())) != expected || out.group.order() != expected)
    throw InvariantViolation("Witt group enumeration did not reach every vector");
  return out;
}

}  // namespace mackey
