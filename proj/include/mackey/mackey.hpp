#pragma once

// Mackey and Green functors for the cyclic group C_n.
//
// Levels are indexed by the divisors d of n (the value at C_n/C_d). Only
// prime-index restrictions and transfers are stored; composites are formed on
// demand. weyl(d) is the action of the distinguished generator g on the level
// at C_n/C_d (for a fixed-point functor, m -> g.m).

#include "mackey/fgab.hpp"
#include "mackey/gset.hpp"

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace mackey {

/// Multiplication of a level on its generators.
struct RingStructure {
  std::vector<std::vector<Vec>> products;  // products[i][j] = e_i * e_j
  Vec unit;

  Vec multiply(const Vec& x, const Vec& y) const {
    Vec out(unit.size(), Int(0));
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < y.size(); ++j)
        if (y[j] != 0) axpy(out, x[i] * y[j], products[i][j]);
    }
    return out;
  }
};

/// Reduce every column of m into the normal form of `target`.
inline Matrix reduce_columns(const FgAbGroup& target, Matrix m) {
  if (!target.is_canonical()) return m;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    bool small = true;
    for (std::size_t i = 0; i < target.invariant_factors().size() && small; ++i)
      small = m(i, j) >= 0 && m(i, j) < target.invariant_factors()[i];
    if (!small) m.set_column(j, target.normal_form(m.column(j)));
  }
  return m;
}

class MackeyFunctor {
public:
  MackeyFunctor() : MackeyFunctor(1) {}

  explicit MackeyFunctor(long n) : n_(n) {
    if (n < 1) throw InvalidArgument("C_n needs n >= 1");
    divs_ = mackey::divisors(n);
    for (long d : divs_) levels_[d] = FgAbGroup();
  }

  long n() const { return n_; }
  const std::vector<long>& divisors() const { return divs_; }

  /// Pairs (d, e) with d | e | n and e/d prime.
  std::vector<std::pair<long, long>> edges() const {
    std::vector<std::pair<long, long>> out;
    for (long e : divs_)
      for (long d : divs_)
        if (e % d == 0 && is_prime(e / d)) out.emplace_back(d, e);
    return out;
  }

  const FgAbGroup& level(long d) const { return levels_.at(check_div(d)); }
  std::size_t gens(long d) const { return level(d).ngens(); }

  void set_level(long d, FgAbGroup g) { levels_[check_div(d)] = std::move(g); }
  /// level(e) -> level(d), e/d prime.
  void set_res(long e, long d, Matrix m) {
    check_edge(d, e);
    check_shape(m, d, e);
    res_[{d, e}] = std::move(m);
  }
  /// level(d) -> level(e), e/d prime.
  void set_tr(long d, long e, Matrix m) {
    check_edge(d, e);
    check_shape(m, e, d);
    tr_[{d, e}] = std::move(m);
  }
  void set_weyl(long d, Matrix m) {
    check_shape(m, d, d);
    weyl_[check_div(d)] = std::move(m);
  }

  const Matrix& res_step(long e, long d) const { return lookup(res_, d, e, "restriction"); }
  const Matrix& tr_step(long d, long e) const { return lookup(tr_, d, e, "transfer"); }
  const Matrix& weyl(long d) const {
    auto it = weyl_.find(check_div(d));
    if (it == weyl_.end()) throw InvalidArgument("missing Weyl action at level " + std::to_string(d));
    return it->second;
  }

  /// Composite restriction level(e) -> level(d) along the chain that
  /// removes the smallest prime first.
  Matrix res(long e, long d) const {
    check_divides(d, e);
    Matrix m = Matrix::identity(gens(e));
    long cur = e;
    while (cur != d) {
      long p = smallest_prime(cur / d);
      m = reduce_columns(level(cur / p), res_step(cur, cur / p) * m);
      cur /= p;
    }
    return m;
  }

  /// Composite transfer level(d) -> level(e).
  Matrix tr(long d, long e) const {
    check_divides(d, e);
    Matrix m = Matrix::identity(gens(d));
    long cur = d;
    while (cur != e) {
      long p = smallest_prime(e / cur);
      m = reduce_columns(level(cur * p), tr_step(cur, cur * p) * m);
      cur *= p;
    }
    return m;
  }

  /// weyl(d)^k, with k taken modulo n/d.
  Matrix weyl_power(long d, long k) const {
    long ord = n_ / d;
    k = imod(k, ord);
    Matrix result = Matrix::identity(gens(d));
    Matrix base = weyl(d);
    while (k > 0) {
      if (k & 1) result = reduce_columns(level(d), base * result);
      k >>= 1;
      if (k) base = reduce_columns(level(d), base * base);
    }
    return result;
  }

  /// M^*(phi) for phi : C_n/C_a -> C_n/C_b sending the base coset to g^k C_b.
  Matrix pullback_along(long a, long b, long k) const { return reduce_columns(level(a), res(b, a) * weyl_power(b, k)); }
  /// M_*(phi) for the same orbit map.
  Matrix pushforward_along(long a, long b, long k) const { return reduce_columns(level(b), weyl_power(b, -k) * tr(a, b)); }

  bool is_canonical() const {
    for (long d : divs_)
      if (!level(d).is_canonical()) return false;
    return true;
  }

  /// Every level replaced by its canonical presentation; optionally returns
  /// the coordinate changes old -> new (`to`) and new -> old (`from`).
  MackeyFunctor canonicalized(std::map<long, Matrix>* to = nullptr,
                              std::map<long, Matrix>* from = nullptr) const {
    MackeyFunctor out(n_);
    for (long d : divs_) {
      out.set_level(d, level(d).canonical_group());
      if (to) (*to)[d] = level(d).to_canonical();
      if (from) (*from)[d] = level(d).from_canonical();
    }
    auto conj = [&](long tgt, long src, const Matrix& m) {
      return reduce_columns(out.level(tgt), level(tgt).to_canonical() * m * level(src).from_canonical());
    };
    for (const auto& [key, m] : res_) out.set_res(key.second, key.first, conj(key.first, key.second, m));
    for (const auto& [key, m] : tr_) out.set_tr(key.first, key.second, conj(key.second, key.first, m));
    for (const auto& [d, m] : weyl_) out.set_weyl(d, conj(d, d, m));
    return out;
  }

  std::string str() const {
    std::ostringstream os;
    for (long d : divs_) os << "C_" << d << ": " << level(d).str() << "\n";
    return os.str();
  }

private:
  long check_div(long d) const {
    if (d < 1 || n_ % d != 0) throw InvalidArgument("level " + std::to_string(d) + " is not a divisor of " + std::to_string(n_));
    return d;
  }
  void check_divides(long d, long e) const {
    check_div(d);
    check_div(e);
    if (e % d != 0) throw InvalidArgument("level " + std::to_string(d) + " does not divide " + std::to_string(e));
  }
  void check_edge(long d, long e) const {
    check_divides(d, e);
    if (!is_prime(e / d)) throw InvalidArgument("only prime-index structure maps are stored");
  }
  void check_shape(const Matrix& m, long tgt, long src) const {
    if (m.rows() != gens(tgt) || m.cols() != gens(src))
      throw InvalidArgument("structure map has the wrong shape");
  }
  static long smallest_prime(long k) {
    for (long p = 2; p <= k; ++p)
      if (k % p == 0) return p;
    return k;
  }
  const Matrix& lookup(const std::map<std::pair<long, long>, Matrix>& tbl, long d, long e, const char* what) const {
    auto it = tbl.find({d, e});
    if (it == tbl.end())
      throw InvalidArgument(std::string("missing ") + what + " between levels " + std::to_string(d) + " and " + std::to_string(e));
    return it->second;
  }

  long n_;
  std::vector<long> divs_;
  std::map<long, FgAbGroup> levels_;
  std::map<std::pair<long, long>, Matrix> res_, tr_;
  std::map<long, Matrix> weyl_;
};

class GreenFunctor {
public:
  GreenFunctor() = default;
  GreenFunctor(MackeyFunctor m, std::map<long, RingStructure> rings)
      : m_(std::move(m)), rings_(std::move(rings)) {
    for (long d : m_.divisors())
      if (!rings_.count(d)) throw InvalidArgument("Green functor is missing a ring level");
  }

  const MackeyFunctor& mackey() const { return m_; }
  long n() const { return m_.n(); }
  const RingStructure& ring(long d) const { return rings_.at(d); }
  const Vec& unit(long d) const { return rings_.at(d).unit; }

  Vec multiply(long d, const Vec& x, const Vec& y) const {
    return m_.level(d).normal_form(rings_.at(d).multiply(x, y));
  }

  GreenFunctor canonicalized() const {
    MackeyFunctor c = m_.canonicalized();
    std::map<long, RingStructure> rings;
    for (long d : m_.divisors()) {
      const FgAbGroup& g = m_.level(d);
      const Matrix& from = g.from_canonical();
      const std::size_t k = c.gens(d);
      RingStructure r;
      r.products.assign(k, std::vector<Vec>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
          Vec p = c.level(d).normal_form(g.to_canonical() * rings_.at(d).multiply(from.column(i), from.column(j)));
          r.products[i][j] = p;
          r.products[j][i] = p;
        }
      r.unit = c.level(d).normal_form(g.to_canonical() * rings_.at(d).unit);
      rings[d] = std::move(r);
    }
    return GreenFunctor(std::move(c), std::move(rings));
  }

private:
  MackeyFunctor m_;
  std::map<long, RingStructure> rings_;
};

/// Levelwise maps between two Mackey functors over the same C_n.
struct MackeyMorphism {
  std::map<long, Matrix> maps;  // level d: target gens x source gens

  const Matrix& at(long d) const { return maps.at(d); }

  static MackeyMorphism identity(const MackeyFunctor& m) {
    MackeyMorphism f;
    for (long d : m.divisors()) f.maps[d] = Matrix::identity(m.gens(d));
    return f;
  }
};

inline MackeyMorphism compose(const MackeyMorphism& g, const MackeyMorphism& f) {
  MackeyMorphism h;
  for (const auto& [d, m] : f.maps) h.maps[d] = g.at(d) * m;
  return h;
}

/// Equality of morphisms modulo the target relations.
inline bool equal(const MackeyFunctor& target, const MackeyMorphism& f, const MackeyMorphism& g) {
  for (long d : target.divisors())
    if (!equal_mod(target.level(d), f.at(d), g.at(d))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Axiom checking

struct AxiomReport {
  std::vector<std::string> failures;
  std::size_t checks = 0;
  bool ok() const { return failures.empty(); }

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond) failures.push_back(what);
  }
  void merge(const AxiomReport& o) {
    checks += o.checks;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  }
  std::string str() const {
    std::ostringstream os;
    os << (ok() ? "pass" : "FAIL") << " (" << checks << " checks)";
    for (const auto& f : failures) os << "\n  " << f;
    return os.str();
  }
};

inline bool map_well_defined(const FgAbGroup& src, const FgAbGroup& tgt, const Matrix& m) {
  for (std::size_t i = 0; i < src.relations().rows(); ++i)
    if (!tgt.is_zero(m * src.relations().row(i))) return false;
  return true;
}

inline AxiomReport check_axioms(const MackeyFunctor& m) {
  AxiomReport rep;
  const long n = m.n();
  auto tag = [](const char* what, long a, long b) {
    return std::string(what) + " [" + std::to_string(a) + "," + std::to_string(b) + "]";
  };
  for (long d : m.divisors()) {
    const FgAbGroup& L = m.level(d);
    rep.expect(map_well_defined(L, L, m.weyl(d)), tag("weyl well-defined", d, d));
    rep.expect(equal_mod(L, m.weyl_power(d, n / d), Matrix::identity(L.ngens())), tag("weyl order divides n/d", d, d));
  }
  for (auto [d, e] : m.edges()) {
    const Matrix& r = m.res_step(e, d);
    const Matrix& t = m.tr_step(d, e);
    rep.expect(map_well_defined(m.level(e), m.level(d), r), tag("res well-defined", e, d));
    rep.expect(map_well_defined(m.level(d), m.level(e), t), tag("tr well-defined", d, e));
    rep.expect(equal_mod(m.level(d), r * m.weyl(e), m.weyl(d) * r), tag("res commutes with weyl", e, d));
    rep.expect(equal_mod(m.level(e), t * m.weyl(d), m.weyl(e) * t), tag("tr commutes with weyl", d, e));
  }
  for (long e : m.divisors())
    for (long d : m.divisors()) {
      if (e % d != 0 || d == e) continue;
      // path independence over every chain of prime steps
      std::function<void(long, Matrix, Matrix)> walk = [&](long cur, Matrix rr, Matrix tt) {
        if (cur == d) {
          rep.expect(equal_mod(m.level(d), rr, m.res(e, d)), tag("res path independence", e, d));
          rep.expect(equal_mod(m.level(e), tt, m.tr(d, e)), tag("tr path independence", d, e));
          return;
        }
        for (long p : prime_factors(cur / d))
          walk(cur / p, m.res_step(cur, cur / p) * rr, tt * m.tr_step(cur / p, cur));
      };
      walk(e, Matrix::identity(m.gens(e)), Matrix::identity(m.gens(e)));
      // restrictions land in invariants; transfers kill the subgroup action
      long k = n / e;
      rep.expect(equal_mod(m.level(d), m.weyl_power(d, k) * m.res(e, d), m.res(e, d)), tag("res lands in C_e-invariants", e, d));
      rep.expect(equal_mod(m.level(e), m.tr(d, e) * m.weyl_power(d, k), m.tr(d, e)), tag("tr is C_e-invariant", d, e));
    }
  // double coset formula
  for (long e : m.divisors())
    for (long a : m.divisors())
      for (long b : m.divisors()) {
        if (e % a != 0 || e % b != 0) continue;
        long g = igcd(a, b), l = ilcm(a, b);
        Matrix lhs = m.res(e, a) * m.tr(b, e);
        Matrix inner = m.res(b, g);
        Matrix rhs(m.gens(a), m.gens(b));
        for (long j = 0; j < e / l; ++j) rhs += m.tr(g, a) * m.weyl_power(g, (n / e) * j) * inner;
        rep.expect(equal_mod(m.level(a), lhs, rhs), "double coset res^" + std::to_string(e) + "_" + std::to_string(a) +
                                                        " tr^" + std::to_string(e) + "_" + std::to_string(b));
      }
  return rep;
}

inline AxiomReport check_axioms(const GreenFunctor& r) {
  AxiomReport rep = check_axioms(r.mackey());
  const MackeyFunctor& m = r.mackey();
  auto basis = [&](long d, std::size_t i) { return unit_vec(m.gens(d), i); };
  for (long d : m.divisors()) {
    const FgAbGroup& L = m.level(d);
    const std::size_t k = L.ngens();
    std::string at = " at level " + std::to_string(d);
    for (std::size_t i = 0; i < k; ++i) {
      Vec x = basis(d, i);
      rep.expect(L.equal(r.multiply(d, r.unit(d), x), x), "unit" + at);
      for (std::size_t j = 0; j < k; ++j) {
        Vec y = basis(d, j);
        Vec xy = r.multiply(d, x, y);
        rep.expect(L.equal(xy, r.multiply(d, y, x)), "commutativity" + at);
        rep.expect(L.equal(m.weyl(d) * xy, r.multiply(d, m.weyl(d) * x, m.weyl(d) * y)), "weyl multiplicative" + at);
        for (std::size_t l = 0; l < k; ++l) {
          Vec z = basis(d, l);
          rep.expect(L.equal(r.multiply(d, xy, z), r.multiply(d, x, r.multiply(d, y, z))), "associativity" + at);
        }
      }
      // products of relations vanish (multiplication well defined)
      for (std::size_t q = 0; q < L.relations().rows(); ++q)
        rep.expect(L.is_zero(r.multiply(d, L.relations().row(q), x)), "multiplication respects relations" + at);
    }
    rep.expect(L.equal(m.weyl(d) * r.unit(d), r.unit(d)), "weyl fixes unit" + at);
  }
  for (auto [d, e] : m.edges()) {
    std::string at = " for " + std::to_string(d) + "<" + std::to_string(e);
    const Matrix& res = m.res_step(e, d);
    const Matrix& tr = m.tr_step(d, e);
    rep.expect(m.level(d).equal(res * r.unit(e), r.unit(d)), "res preserves unit" + at);
    for (std::size_t i = 0; i < m.gens(e); ++i)
      for (std::size_t j = 0; j < m.gens(e); ++j) {
        Vec x = basis(e, i), y = basis(e, j);
        rep.expect(m.level(d).equal(res * r.multiply(e, x, y), r.multiply(d, res * x, res * y)), "res multiplicative" + at);
      }
    for (std::size_t i = 0; i < m.gens(d); ++i)
      for (std::size_t j = 0; j < m.gens(e); ++j) {
        Vec x = basis(d, i), y = basis(e, j);
        rep.expect(m.level(e).equal(tr * r.multiply(d, x, res * y), r.multiply(e, tr * x, y)), "Frobenius reciprocity" + at);
      }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Constructions

/// i_J^*: restriction to the subgroup C_j, whose distinguished generator is
/// g^(n/j).
inline MackeyFunctor restrict_to(const MackeyFunctor& m, long j) {
  if (j < 1 || m.n() % j != 0) throw InvalidArgument("restriction needs j | n");
  MackeyFunctor out(j);
  for (long d : out.divisors()) {
    out.set_level(d, m.level(d));
    out.set_weyl(d, m.weyl_power(d, m.n() / j));
  }
  for (auto [d, e] : out.edges()) {
    out.set_res(e, d, m.res_step(e, d));
    out.set_tr(d, e, m.tr_step(d, e));
  }
  return out;
}

inline GreenFunctor restrict_to(const GreenFunctor& r, long j) {
  std::map<long, RingStructure> rings;
  for (long d : divisors(j)) rings[d] = r.ring(d);
  return GreenFunctor(restrict_to(r.mackey(), j), std::move(rings));
}

/// A finitely generated abelian group (or ring) with an action of the
/// distinguished generator of C_n.
struct CnModule {
  long n = 1;
  FgAbGroup group;
  Matrix action;                       // g on generators
  std::optional<RingStructure> ring;  // present for rings acted on by ring maps
};

inline void validate(const CnModule& mod) {
  if (mod.action.rows() != mod.group.ngens() || mod.action.cols() != mod.group.ngens())
    throw InvalidArgument("action matrix has the wrong shape");
  if (!map_well_defined(mod.group, mod.group, mod.action))
    throw InvalidArgument("action does not respect the relations");
  if (!equal_mod(mod.group, matrix_pow(mod.action, mod.n), Matrix::identity(mod.group.ngens())))
    throw InvalidArgument("action order does not divide n");
}

/// Fixed-point Mackey functor: level d is the C_d-fixed subgroup; restriction
/// is inclusion, transfer sums over cosets, weyl is the action of g.
inline MackeyFunctor fixed_point_mackey(const CnModule& mod, std::map<long, Subquotient>* levels_out = nullptr) {
  validate(mod);
  const long n = mod.n;
  const std::size_t k = mod.group.ngens();
  MackeyFunctor out(n);
  std::map<long, Subquotient> lv;
  std::map<long, Matrix> gpow;  // g^(n/d)
  for (long d : divisors(n)) {
    Matrix h = matrix_pow(mod.action, n / d);
    gpow[d] = h;
    Lattice fixed = preimage_of_zero(h - Matrix::identity(k), mod.group);
    lv.emplace(d, subquotient(mod.group, fixed, {}));
    out.set_level(d, lv.at(d).group);
  }
  auto image = [&](long d, const Matrix& op, long src) {
    const Subquotient& s = lv.at(src);
    const Subquotient& t = lv.at(d);
    Matrix m(t.group.ngens(), s.group.ngens());
    for (std::size_t j = 0; j < s.group.ngens(); ++j) m.set_column(j, t.class_of(op * s.reps.column(j)));
    return m;
  };
  for (long d : divisors(n)) out.set_weyl(d, image(d, mod.action, d));
  for (auto [d, e] : out.edges()) {
    out.set_res(e, d, image(d, Matrix::identity(k), e));
    Matrix sum(k, k);
    Matrix step = gpow[e];
    Matrix cur = Matrix::identity(k);
    for (long i = 0; i < e / d; ++i) {
      sum += cur;
      cur = step * cur;
    }
    out.set_tr(d, e, image(e, sum, d));
  }
  if (levels_out) *levels_out = std::move(lv);
  return out;
}

inline GreenFunctor fixed_point_green(const CnModule& mod) {
  if (!mod.ring) throw InvalidArgument("fixed_point_green needs a ring structure");
  const RingStructure& ring = *mod.ring;
  for (std::size_t i = 0; i < mod.group.ngens(); ++i) {
    Vec x = unit_vec(mod.group.ngens(), i);
    for (std::size_t j = 0; j < mod.group.ngens(); ++j) {
      Vec y = unit_vec(mod.group.ngens(), j);
      if (!mod.group.equal(mod.action * ring.multiply(x, y), ring.multiply(mod.action * x, mod.action * y)))
        throw InvalidArgument("action is not by ring maps");
    }
  }
  std::map<long, Subquotient> lv;
  MackeyFunctor m = fixed_point_mackey(mod, &lv);
  std::map<long, RingStructure> rings;
  for (long d : m.divisors()) {
    const Subquotient& s = lv.at(d);
    const std::size_t g = s.group.ngens();
    RingStructure r;
    r.products.assign(g, std::vector<Vec>(g));
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < g; ++j)
        r.products[i][j] = s.class_of(ring.multiply(s.reps.column(i), s.reps.column(j)));
    r.unit = s.class_of(ring.unit);
    rings[d] = std::move(r);
  }
  return GreenFunctor(std::move(m), std::move(rings));
}

// Standard modules and rings ------------------------------------------------

/// A group with trivial action.
inline CnModule trivial_module(long n, const FgAbGroup& g) {
  return CnModule{n, g, Matrix::identity(g.ngens()), std::nullopt};
}

/// Z or Z/m with trivial action, as a ring.
inline CnModule trivial_ring(long n, const Int& characteristic) {
  FgAbGroup g = FgAbGroup::cyclic(characteristic);
  RingStructure r{{{Vec{Int(1)}}}, Vec{Int(1)}};
  return CnModule{n, g, Matrix::identity(1), r};
}

/// Z[X] (or Z/m[X]) for a C_n-set X as a module, with g e_x = e_{g x}.
inline CnModule permutation_module(const GSet& x, const Int& characteristic = 0) {
  const std::size_t k = x.size();
  Matrix rel(characteristic == 0 ? 0 : k, k);
  if (characteristic != 0)
    for (std::size_t i = 0; i < k; ++i) rel(i, i) = characteristic;
  Matrix act(k, k);
  for (std::size_t p = 0; p < k; ++p) act(static_cast<std::size_t>(x.act(static_cast<long>(p))), p) = 1;
  return CnModule{x.n(), FgAbGroup(k, rel), act, std::nullopt};
}

/// Functions X -> Z (or Z/m) with pointwise product; g acts by translation.
inline CnModule function_ring(const GSet& x, const Int& characteristic = 0) {
  CnModule mod = permutation_module(x, characteristic);
  const std::size_t k = x.size();
  RingStructure r;
  r.products.assign(k, std::vector<Vec>(k, zero_vec(k)));
  for (std::size_t i = 0; i < k; ++i) r.products[i][i] = unit_vec(k, i);
  r.unit = Vec(k, Int(1));
  mod.ring = r;
  return mod;
}

/// Z[i] with g acting by complex conjugation; needs n even.
inline CnModule gaussian_integers_conjugation(long n) {
  if (n % 2 != 0) throw InvalidArgument("conjugation has order 2, so n must be even");
  RingStructure r;
  r.products = {{Vec{Int(1), Int(0)}, Vec{Int(0), Int(1)}}, {Vec{Int(0), Int(1)}, Vec{Int(-1), Int(0)}}};
  r.unit = Vec{Int(1), Int(0)};
  return CnModule{n, FgAbGroup::free(2), Matrix::of({{1, 0}, {0, -1}}), r};
}

// Representable functors ----------------------------------------------------

/// Points of C_n/C_d sent by the projection to C_n/C_e (d | e).
inline std::vector<long> projection_map(long n, long d, long e) {
  std::vector<long> f(static_cast<std::size_t>(n / d));
  for (long i = 0; i < n / d; ++i) f[static_cast<std::size_t>(i)] = i % (n / e);
  return f;
}

/// Translation by g on C_n/C_d.
inline std::vector<long> translation_map(long n, long d) {
  std::vector<long> f(static_cast<std::size_t>(n / d));
  for (long i = 0; i < n / d; ++i) f[static_cast<std::size_t>(i)] = (i + 1) % (n / d);
  return f;
}

/// The functor represented by T, A_T(X) = spans T <- U -> X. Levels are free
/// on the span bases; restriction is pullback, transfer is pushforward.
inline MackeyFunctor representable(const GSet& t, std::map<long, SpanBasis>* bases_out = nullptr) {
  const long n = t.n();
  MackeyFunctor out(n);
  std::map<long, SpanBasis> bases;
  for (long d : divisors(n)) {
    bases.emplace(d, SpanBasis(t, GSet::orbit(n, d)));
    out.set_level(d, FgAbGroup::free(bases.at(d).size()));
  }
  auto build = [&](const SpanBasis& src, const SpanBasis& dst, bool push, const std::vector<long>& f) {
    Matrix m(dst.size(), src.size());
    for (std::size_t i = 0; i < src.size(); ++i)
      m.set_column(i, push ? span_push(src, dst, f, i) : span_pull(src, dst, f, i));
    return m;
  };
  for (long d : divisors(n)) out.set_weyl(d, build(bases.at(d), bases.at(d), false, translation_map(n, d)));
  for (auto [d, e] : out.edges()) {
    auto proj = projection_map(n, d, e);
    out.set_res(e, d, build(bases.at(e), bases.at(d), false, proj));
    out.set_tr(d, e, build(bases.at(d), bases.at(e), true, proj));
  }
  if (bases_out) *bases_out = std::move(bases);
  return out;
}

/// A finite C_n-monoid with absorbing zero, given on its nonzero elements.
/// `mult[a][b]` is the index of ab or -1 for zero.
struct MonoidSpans {
  GSet elements;
  std::vector<std::vector<long>> mult;
  long one = 0;
};

/// A_T for a monoid T with the product induced by the multiplication of T
/// (pointed: spans through zero vanish). T = point gives the Burnside functor.
inline GreenFunctor monoid_representable(const MonoidSpans& t) {
  const long n = t.elements.n();
  std::map<long, SpanBasis> bases;
  MackeyFunctor m = representable(t.elements, &bases);
  std::map<long, RingStructure> rings;
  for (long d : divisors(n)) {
    const SpanBasis& b = bases.at(d);
    const GSet& x = b.x();
    const std::size_t k = b.size();
    RingStructure r;
    r.products.assign(k, std::vector<Vec>(k, zero_vec(k)));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        const auto& e1 = b[i];
        const auto& e2 = b[j];
        long len1 = n / e1.c, len2 = n / e2.c;
        long t1 = b.t_of(e1.point), x1 = b.x_of(e1.point);
        long t2 = b.t_of(e2.point), x2 = b.x_of(e2.point);
        std::vector<std::vector<bool>> seen(static_cast<std::size_t>(len1), std::vector<bool>(static_cast<std::size_t>(len2), false));
        for (long u = 0; u < len1; ++u)
          for (long v = 0; v < len2; ++v) {
            if (seen[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) continue;
            if (x.power(x1, u) != x.power(x2, v)) continue;
            long orbit_len = 0;
            long a = u, c = v;
            while (!seen[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)]) {
              seen[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] = true;
              ++orbit_len;
              a = (a + 1) % len1;
              c = (c + 1) % len2;
            }
            long prod = t.mult[static_cast<std::size_t>(t.elements.power(t1, u))][static_cast<std::size_t>(t.elements.power(t2, v))];
            if (prod < 0) continue;
            r.products[i][j][static_cast<std::size_t>(b.index(b.point_of(prod, x.power(x1, u)), n / orbit_len))] += 1;
          }
      }
    r.unit = zero_vec(k);
    r.unit[static_cast<std::size_t>(b.index(b.point_of(t.one, 0), d))] = 1;
    rings[d] = std::move(r);
  }
  return GreenFunctor(std::move(m), std::move(rings));
}

inline GreenFunctor burnside(long n) {
  return monoid_representable(MonoidSpans{GSet::point(n), {{0}}, 0});
}

// ---------------------------------------------------------------------------
// Morphism groups

/// Hom(M, N) as an abelian group: integer families of level matrices that are
/// well defined and commute with res, tr and weyl, modulo those that vanish.
inline FgAbGroup hom_group(const MackeyFunctor& m, const MackeyFunctor& nn) {
  if (m.n() != nn.n()) throw InvalidArgument("hom_group: different groups");
  // unknowns: entries of F_d, column-major per level
  std::map<long, std::size_t> offset;
  std::size_t v = 0;
  for (long d : m.divisors()) {
    offset[d] = v;
    v += nn.gens(d) * m.gens(d);
  }
  auto var = [&](long d, std::size_t row, std::size_t col) { return offset[d] + col * nn.gens(d) + row; };
  // ambient: Z^v modulo maps whose columns lie in the target relations
  std::vector<Vec> amb_rel;
  for (long d : m.divisors()) {
    const Matrix& rel = nn.level(d).relations();
    for (std::size_t col = 0; col < m.gens(d); ++col)
      for (std::size_t q = 0; q < rel.rows(); ++q) {
        Vec r(v, Int(0));
        for (std::size_t row = 0; row < nn.gens(d); ++row) r[var(d, row, col)] = rel(q, row);
        amb_rel.push_back(r);
      }
  }
  FgAbGroup ambient(v, Matrix::from_rows(amb_rel, v));
  // constraints: each yields a vector in some target level
  std::vector<Vec> rows;            // constraint matrix rows (one per target coordinate)
  std::vector<Vec> target_rel;      // block-diagonal relations of the constraint target
  std::size_t tdim = 0;
  auto add_block = [&](long d, const std::vector<Vec>& block_rows) {
    // block_rows: nn.gens(d) rows of length v
    const Matrix& rel = nn.level(d).relations();
    for (const auto& r : block_rows) rows.push_back(r);
    for (std::size_t q = 0; q < rel.rows(); ++q) {
      Vec r(tdim + nn.gens(d), Int(0));
      for (std::size_t i = 0; i < nn.gens(d); ++i) r[tdim + i] = rel(q, i);
      target_rel.push_back(r);
    }
    tdim += nn.gens(d);
  };
  // F_d applied to a fixed vector x in M(d): linear in the unknowns
  auto apply_f = [&](long d, const Vec& x, const Matrix& post) {
    // post * F_d * x, rows of length v
    std::vector<Vec> out(post.rows(), Vec(v, Int(0)));
    for (std::size_t i = 0; i < post.rows(); ++i)
      for (std::size_t row = 0; row < nn.gens(d); ++row) {
        if (post(i, row) == 0) continue;
        for (std::size_t col = 0; col < m.gens(d); ++col)
          if (x[col] != 0) out[i][var(d, row, col)] += post(i, row) * x[col];
      }
    return out;
  };
  auto sub = [](std::vector<Vec> a, const std::vector<Vec>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= b[i][j];
    return a;
  };
  for (long d : m.divisors()) {
    const Matrix& rel = m.level(d).relations();
    for (std::size_t q = 0; q < rel.rows(); ++q) add_block(d, apply_f(d, rel.row(q), Matrix::identity(nn.gens(d))));
    for (std::size_t j = 0; j < m.gens(d); ++j) {
      Vec x = unit_vec(m.gens(d), j);
      add_block(d, sub(apply_f(d, m.weyl(d) * x, Matrix::identity(nn.gens(d))), apply_f(d, x, nn.weyl(d))));
    }
  }
  for (auto [d, e] : m.edges()) {
    for (std::size_t j = 0; j < m.gens(e); ++j) {
      Vec x = unit_vec(m.gens(e), j);
      add_block(d, sub(apply_f(d, m.res_step(e, d) * x, Matrix::identity(nn.gens(d))), apply_f(e, x, nn.res_step(e, d))));
    }
    for (std::size_t j = 0; j < m.gens(d); ++j) {
      Vec x = unit_vec(m.gens(d), j);
      add_block(e, sub(apply_f(e, m.tr_step(d, e) * x, Matrix::identity(nn.gens(e))), apply_f(d, x, nn.tr_step(d, e))));
    }
  }
  Matrix c = Matrix::from_rows(rows, v);
  for (auto& r : target_rel) r.resize(tdim, Int(0));
  FgAbGroup tgt(tdim, Matrix::from_rows(target_rel, tdim));
  return subquotient(ambient, preimage_of_zero(c, tgt), {}).group;
}

}  // namespace mackey
