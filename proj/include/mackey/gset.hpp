#pragma once

// Finite C_n-sets given by the permutation of the distinguished generator,
// and the span bases of the Burnside category built from them.

#include "mackey/integer.hpp"

#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace mackey {

class GSet {
public:
  GSet() = default;

  /// `action[x]` is g.x; the permutation's order must divide n.
  GSet(long n, std::vector<long> action) : n_(n), act_(std::move(action)) {
    std::vector<bool> hit(act_.size(), false);
    for (long y : act_) {
      if (y < 0 || static_cast<std::size_t>(y) >= act_.size() || hit[static_cast<std::size_t>(y)])
        throw InvalidArgument("G-set action is not a permutation");
      hit[static_cast<std::size_t>(y)] = true;
    }
    for (std::size_t x = 0; x < act_.size(); ++x)
      if (power(static_cast<long>(x), n_) != static_cast<long>(x))
        throw InvalidArgument("generator action has order not dividing n");
  }

  static GSet point(long n) { return GSet(n, {0}); }
  static GSet empty(long n) { return GSet(n, {}); }

  /// C_n/C_d with points g^i C_d, i = 0 .. n/d - 1.
  static GSet orbit(long n, long d) {
    if (d < 1 || n % d != 0) throw InvalidArgument("orbit C_n/C_d needs d | n");
    long k = n / d;
    std::vector<long> act(static_cast<std::size_t>(k));
    for (long i = 0; i < k; ++i) act[static_cast<std::size_t>(i)] = (i + 1) % k;
    return GSet(n, act);
  }

  /// Points (a, b) numbered a * |B| + b.
  static GSet product(const GSet& a, const GSet& b) {
    std::vector<long> act;
    act.reserve(a.size() * b.size());
    for (std::size_t x = 0; x < a.size(); ++x)
      for (std::size_t y = 0; y < b.size(); ++y)
        act.push_back(a.act_[x] * static_cast<long>(b.size()) + b.act_[y]);
    return GSet(a.n_, act);
  }

  static GSet disjoint_union(const GSet& a, const GSet& b) {
    std::vector<long> act = a.act_;
    for (long y : b.act_) act.push_back(y + static_cast<long>(a.size()));
    return GSet(a.n_, act);
  }

  long n() const { return n_; }
  std::size_t size() const { return act_.size(); }
  long act(long x) const { return act_[static_cast<std::size_t>(x)]; }
  long power(long x, long k) const {
    k = imod(k, n_ == 0 ? 1 : n_);
    for (long i = 0; i < k; ++i) x = act_[static_cast<std::size_t>(x)];
    return x;
  }
  const std::vector<long>& action() const { return act_; }

  /// Orbits listed as x, g.x, g^2.x, ... starting from their smallest point.
  std::vector<std::vector<long>> orbits() const {
    std::vector<std::vector<long>> out;
    std::vector<bool> seen(size(), false);
    for (std::size_t x = 0; x < size(); ++x) {
      if (seen[x]) continue;
      std::vector<long> orb;
      long y = static_cast<long>(x);
      while (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        orb.push_back(y);
        y = act(y);
      }
      out.push_back(std::move(orb));
    }
    return out;
  }

  /// Order s of the stabilizer C_s of x.
  long stabilizer(long x) const {
    long len = 1;
    for (long y = act(x); y != x; y = act(y)) ++len;
    return n_ / len;
  }

private:
  long n_ = 1;
  std::vector<long> act_;
};

/// Checks that f : X -> Y (with f[x] = -1 meaning "the basepoint") commutes
/// with the generator.
inline bool is_equivariant(const GSet& x, const GSet& y, const std::vector<long>& f) {
  if (f.size() != x.size()) return false;
  for (std::size_t p = 0; p < x.size(); ++p) {
    long img = f[p];
    long moved = f[static_cast<std::size_t>(x.act(static_cast<long>(p)))];
    if (img < 0 ? moved >= 0 : moved != y.act(img)) return false;
  }
  return true;
}

/// Basis of the Burnside-category hom group from T to X: isomorphism classes
/// of transitive spans T <- U -> X, i.e. pairs (orbit of T x X, c) where
/// U = C_n/C_c and c divides the stabilizer order of the orbit.
class SpanBasis {
public:
  struct Element {
    long point;  // representative point of T x X (numbered t * |X| + x)
    long c;      // U = C_n / C_c
  };

  SpanBasis(const GSet& t, const GSet& x) : t_(t), x_(x), tx_(GSet::product(t, x)) {
    orbit_of_.assign(tx_.size(), -1);
    auto orbs = tx_.orbits();
    for (std::size_t o = 0; o < orbs.size(); ++o) {
      for (long p : orbs[o]) orbit_of_[static_cast<std::size_t>(p)] = static_cast<long>(o);
      long s = tx_.stabilizer(orbs[o][0]);
      for (long c : divisors(s)) {
        index_[{static_cast<long>(o), c}] = static_cast<long>(elems_.size());
        elems_.push_back({orbs[o][0], c});
      }
    }
  }

  std::size_t size() const { return elems_.size(); }
  const Element& operator[](std::size_t i) const { return elems_[i]; }
  const GSet& t() const { return t_; }
  const GSet& x() const { return x_; }
  const GSet& product() const { return tx_; }

  long t_of(long point) const { return point / static_cast<long>(x_.size()); }
  long x_of(long point) const { return point % static_cast<long>(x_.size()); }
  long point_of(long t, long x) const { return t * static_cast<long>(x_.size()) + x; }

  /// Basis index of the span C_n/C_c -> T x X sending the base coset to p.
  long index(long point, long c) const {
    auto it = index_.find({orbit_of_[static_cast<std::size_t>(point)], c});
    if (it == index_.end()) throw InvariantViolation("span stabilizer does not divide orbit stabilizer");
    return it->second;
  }

private:
  GSet t_, x_, tx_;
  std::vector<Element> elems_;
  std::vector<long> orbit_of_;
  std::map<std::pair<long, long>, long> index_;
};

/// Spans over the same T, coefficients indexed by basis position.
using SpanVec = std::vector<Int>;

/// Post-composition with f : X -> Y (covariant, a transfer-type map).
inline SpanVec span_push(const SpanBasis& from, const SpanBasis& to, const std::vector<long>& f,
                         std::size_t i) {
  SpanVec out(to.size(), Int(0));
  const auto& e = from[i];
  long y = f[static_cast<std::size_t>(from.x_of(e.point))];
  out[static_cast<std::size_t>(to.index(to.point_of(from.t_of(e.point), y), e.c))] += 1;
  return out;
}

/// Pullback along f : X' -> X (contravariant, a restriction-type map). `from`
/// is the basis over X, `to` the basis over X'.
inline SpanVec span_pull(const SpanBasis& from, const SpanBasis& to, const std::vector<long>& f,
                         std::size_t i) {
  SpanVec out(to.size(), Int(0));
  const auto& e = from[i];
  const long n = from.t().n();
  const long len = n / e.c;  // |U|
  long t0 = from.t_of(e.point), x0 = from.x_of(e.point);
  const GSet& xp = to.x();
  // points of U x_X X': (i, x') with f(x') = g^i x0, acted on by (i+1, g x')
  std::vector<std::vector<bool>> seen(static_cast<std::size_t>(len), std::vector<bool>(xp.size(), false));
  for (long u = 0; u < len; ++u) {
    long target = from.x().power(x0, u);
    for (std::size_t q = 0; q < xp.size(); ++q) {
      if (f[q] != target || seen[static_cast<std::size_t>(u)][q]) continue;
      long orbit_len = 0;
      long a = u, b = static_cast<long>(q);
      while (!seen[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
        seen[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
        ++orbit_len;
        a = (a + 1) % len;
        b = xp.act(b);
      }
      long t = from.t().power(t0, u);
      out[static_cast<std::size_t>(to.index(to.point_of(t, static_cast<long>(q)), n / orbit_len))] += 1;
    }
  }
  return out;
}

}  // namespace mackey
