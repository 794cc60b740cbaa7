#pragma once

// N_e^{C_n} of a commutative ring with trivial action, through Witt vectors:
// level d is W_<d>(R) presented on the generators V_e(1), e | d, with
// restriction F, transfer V and trivial Weyl action.

#include "mackey/green.hpp"
#include "mackey/witt.hpp"

#include <map>
#include <memory>

namespace mackey {

class NormFunctor {
public:
  NormFunctor(const BaseRing& ring, long n) : ring_(ring), n_(n) {
    if (n < 1) throw InvalidArgument("norm needs n >= 1");
    MackeyFunctor m(n);
    std::map<long, RingStructure> rings;
    for (long d : mackey::divisors(n)) {
      const auto ds = mackey::divisors(d);
      const std::size_t k = ds.size();
      if (ring.has_torsion()) {
        auto en = std::make_shared<WittEnumeration>(enumerate_witt_group(TruncationSet(ds), ring));
        m.set_level(d, en->group);
        enums_[d] = std::move(en);
      } else {
        m.set_level(d, FgAbGroup::free(k));
      }
      m.set_weyl(d, Matrix::identity(k));
      RingStructure r;
      r.products.assign(k, std::vector<Vec>(k, Vec(k, Int(0))));
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
          long l = ilcm(ds[a], ds[b]);
          r.products[a][b][index_in(ds, l)] = igcd(ds[a], ds[b]);
        }
      r.unit = unit_vec(k, 0);
      rings[d] = std::move(r);
    }
    for (auto [d, e] : m.edges()) {
      const long p = e / d;
      const auto de = mackey::divisors(e), dd = mackey::divisors(d);
      Matrix f(dd.size(), de.size()), v(de.size(), dd.size());
      for (std::size_t i = 0; i < de.size(); ++i) {
        long g = igcd(p, de[i]);
        f(index_in(dd, de[i] / g), i) = g;  // F_p V_e = gcd(p, e) V_{e / gcd}
      }
      for (std::size_t i = 0; i < dd.size(); ++i) v(index_in(de, p * dd[i]), i) = 1;  // V_p V_e = V_{pe}
      m.set_res(e, d, f);
      m.set_tr(d, e, v);
    }
    green_ = GreenFunctor(std::move(m), std::move(rings));
  }

  const BaseRing& ring() const { return ring_; }
  long n() const { return n_; }
  /// The Green functor in V_e(1) coordinates.
  const GreenFunctor& green() const { return green_; }
  const MackeyFunctor& mackey() const { return green_.mackey(); }

  /// The classical Witt vector sum_e c_e V_e(1) in W_<d>(R).
  WittVector witt(long d, const Vec& c) const {
    TruncationSet s = TruncationSet::divisors_of(d);
    if (ring_.has_torsion()) return enums_.at(d)->element(c);
    const auto ds = s.elements();
    Vec gh(ds.size(), Int(0));
    for (std::size_t i = 0; i < ds.size(); ++i)
      for (std::size_t j = 0; j < ds.size(); ++j)
        if (ds[i] % ds[j] == 0) gh[i] += Int(ds[j]) * c[j];
    return from_ghost(s, gh);
  }

  /// V_e(1) coordinates of a Witt vector in W_<d>(R).
  Vec coords(long d, const WittVector& w) const {
    if (ring_.has_torsion()) return enums_.at(d)->coords_of(w);
    Vec gh = ghost(w);
    const auto& ds = w.truncation().elements();
    Vec c(ds.size(), Int(0));
    for (std::size_t i = 0; i < ds.size(); ++i) {
      Int rest = gh[i];
      for (std::size_t j = 0; j < i; ++j)
        if (ds[i] % ds[j] == 0) rest -= Int(ds[j]) * c[j];
      c[i] = divexact(rest, Int(ds[i]));
    }
    return c;
  }

private:
  static std::size_t index_in(const std::vector<long>& ds, long x) {
    auto it = std::find(ds.begin(), ds.end(), x);
    if (it == ds.end()) throw InvariantViolation("index outside the divisor list");
    return static_cast<std::size_t>(it - ds.begin());
  }

  BaseRing ring_;
  long n_;
  GreenFunctor green_;
  std::map<long, std::shared_ptr<WittEnumeration>> enums_;
};

inline NormFunctor norm_trivial_ring(const BaseRing& r, long n) { return NormFunctor(r, n); }

/// The Teichmüller vector [r] at the top level, in V_e(1) coordinates.
inline Vec external_norm_element(const NormFunctor& nf, const Int& r) {
  return nf.coords(nf.n(), teichmuller(nf.ring().reduce(r), TruncationSet::divisors_of(nf.n()), nf.ring()));
}

/// Structural equality of two Mackey functors given on the same generators.
inline bool identical(const MackeyFunctor& a, const MackeyFunctor& b) {
  if (a.n() != b.n()) return false;
  for (long d : a.divisors()) {
    if (a.gens(d) != b.gens(d) || !(a.level(d).relations() == b.level(d).relations())) return false;
    if (!(a.weyl(d) == b.weyl(d))) return false;
  }
  for (auto [d, e] : a.edges())
    if (!(a.res_step(e, d) == b.res_step(e, d)) || !(a.tr_step(d, e) == b.tr_step(d, e))) return false;
  return true;
}

/// i^*_{C_j} N^{C_n} R against (N^{C_j} R)^{[] n/j}: the restricted norm is
/// the norm over C_j, total multiplication identifies the box power with it,
/// and the restricted generator acts on the box power by rotating the factors
/// and twisting the last one.
inline AxiomReport check_norm_restriction_identity(const BaseRing& ring, long n, long j) {
  if (j < 1 || n % j != 0) throw InvalidArgument("restriction needs j | n");
  AxiomReport rep;
  NormFunctor big(ring, n), small(ring, j);
  MackeyFunctor restricted = restrict_to(big.mackey(), j);
  rep.expect(identical(restricted, small.mackey()), "restricted norm equals the norm over C_j");
  GreenFunctor r = small.green().canonicalized();
  const std::size_t k = static_cast<std::size_t>(n / j);
  BoxPresentation b = box_power(r, k);
  MackeyMorphism mu = multiplication(b, r);
  rep.merge(check_isomorphism(b.result(), r.mackey(), mu));
  MackeyMorphism rot = induced_on_tags(b, b, [&](long lv, const std::vector<std::size_t>& t) {
    std::vector<Vec> slots;
    slots.push_back(r.mackey().weyl(lv).column(t.back()));
    for (std::size_t i = 0; i + 1 < t.size(); ++i) slots.push_back(unit_vec(r.mackey().gens(lv), t[i]));
    return detail::tensor_vectors(slots);
  });
  rep.merge(check_isomorphism(b.result(), b.result(), rot));
  // rot^k is the generator of C_j acting diagonally
  MackeyMorphism rk = MackeyMorphism::identity(b.result());
  for (std::size_t i = 0; i < k; ++i) rk = compose(rot, rk);
  for (long d : b.result().divisors()) {
    rep.expect(equal_mod(b.result().level(d), rk.at(d), b.result().weyl(d)), "rotation power is the weyl action");
    rep.expect(equal_mod(r.mackey().level(d), mu.at(d) * rot.at(d), restricted.canonicalized().weyl(d) * mu.at(d)),
               "multiplication intertwines rotation with the restricted weyl action");
  }
  return rep;
}

}  // namespace mackey
