#pragma once

// Geometric fixed points: kill transfers from subgroups not containing C_m,
// then reindex over C_n / C_m. Also the cyclotomic comparison of twisted
// cyclic nerves and the algebraic TR tower.

#include "mackey/hochschild.hpp"
#include "mackey/norm.hpp"

#include <string>
#include <vector>

namespace mackey {

/// Levelwise quotients M(d) / sum of tr^d_e images over e | d with m not
/// dividing e; levels with m not dividing d are zero.
struct GeometricQuotient {
  long m = 1;
  std::map<long, FgAbGroup> quotient;  // on the generators of M(d)
  MackeyFunctor tilde;                 // over C_n, canonical
};

inline GeometricQuotient geometric_quotient(const MackeyFunctor& mf, long m) {
  if (m < 1 || mf.n() % m != 0) throw InvalidArgument("geometric fixed points need m | n");
  GeometricQuotient g;
  g.m = m;
  for (long d : mf.divisors()) {
    const std::size_t k = mf.gens(d);
    Matrix rel = mf.level(d).relations();
    if (d % m != 0) {
      rel = vstack(rel, Matrix::identity(k));
    } else {
      for (long e : mackey::divisors(d))
        if (e % m != 0) rel = vstack(rel, mf.tr(e, d).transpose());
    }
    g.quotient.emplace(d, FgAbGroup(k, rel));
  }
  g.tilde = MackeyFunctor(mf.n());
  for (long d : mf.divisors()) g.tilde.set_level(d, g.quotient.at(d).canonical_group());
  auto conj = [&](long tgt, long src, const Matrix& a) {
    return reduce_columns(g.tilde.level(tgt), g.quotient.at(tgt).to_canonical() * a * g.quotient.at(src).from_canonical());
  };
  for (long d : mf.divisors()) g.tilde.set_weyl(d, conj(d, d, mf.weyl(d)));
  for (auto [d, e] : mf.edges()) {
    g.tilde.set_res(e, d, conj(d, e, mf.res_step(e, d)));
    g.tilde.set_tr(d, e, conj(e, d, mf.tr_step(d, e)));
  }
  return g;
}

inline MackeyFunctor tilde_ef(const MackeyFunctor& mf, long m) { return geometric_quotient(mf, m).tilde; }

/// Reindex levels d = m d' of a functor over C_n as levels d' over C_{n/m}.
inline MackeyFunctor reindex(const MackeyFunctor& t, long m) {
  MackeyFunctor out(t.n() / m);
  for (long d : out.divisors()) {
    out.set_level(d, t.level(m * d));
    out.set_weyl(d, t.weyl(m * d));
  }
  for (auto [d, e] : out.edges()) {
    out.set_res(e, d, t.res_step(m * e, m * d));
    out.set_tr(d, e, t.tr_step(m * d, m * e));
  }
  return out;
}

inline MackeyFunctor phi(const MackeyFunctor& mf, long m) { return reindex(tilde_ef(mf, m), m); }

/// phi of a morphism, between the canonical presentations of the quotients.
inline MackeyMorphism phi(const MackeyMorphism& f, const GeometricQuotient& src, const GeometricQuotient& tgt) {
  MackeyMorphism out;
  const long m = src.m;
  for (long d : mackey::divisors(src.tilde.n() / m)) {
    const FgAbGroup& qs = src.quotient.at(m * d);
    const FgAbGroup& qt = tgt.quotient.at(m * d);
    out.maps[d] = reduce_columns(tgt.tilde.level(m * d), qt.to_canonical() * f.at(m * d) * qs.from_canonical());
  }
  return out;
}

inline GreenFunctor phi(const GreenFunctor& r, long m) {
  GeometricQuotient g = geometric_quotient(r.mackey(), m);
  MackeyFunctor out = reindex(g.tilde, m);
  std::map<long, RingStructure> rings;
  for (long d : out.divisors()) {
    const FgAbGroup& q = g.quotient.at(m * d);
    const std::size_t k = out.gens(d);
    RingStructure rs;
    rs.products.assign(k, std::vector<Vec>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        rs.products[i][j] = out.level(d).normal_form(
            q.to_canonical() * r.ring(m * d).multiply(q.from_canonical().column(i), q.from_canonical().column(j)));
    rs.unit = out.level(d).normal_form(q.to_canonical() * r.unit(m * d));
    rings[d] = std::move(rs);
  }
  return GreenFunctor(std::move(out), std::move(rings));
}

inline SimplicialMackey phi(const SimplicialMackey& x, long m) {
  std::vector<GeometricQuotient> qs;
  SimplicialMackey out;
  for (const auto& o : x.objects) {
    qs.push_back(geometric_quotient(o, m));
    out.objects.push_back(reindex(qs.back().tilde, m));
  }
  out.faces.resize(x.faces.size());
  out.degeneracies.resize(x.degeneracies.size());
  for (std::size_t j = 0; j < x.faces.size(); ++j)
    for (const auto& f : x.faces[j]) out.faces[j].push_back(phi(f, qs[j], qs[j - 1]));
  for (std::size_t j = 0; j < x.degeneracies.size(); ++j)
    for (const auto& s : x.degeneracies[j]) out.degeneracies[j].push_back(phi(s, qs[j], qs[j + 1]));
  return out;
}

// ---------------------------------------------------------------------------
// Ghost coordinates

struct GhostValue {
  FgAbGroup group;  // canonical; the ring Phi^{C_d} at the top cell
  RingStructure ring;
  Vec value;
};

/// Restrict a top-level element to C_d and take C_d-geometric fixed points.
inline GhostValue ghost_coordinate(const GreenFunctor& w, long d, const Vec& top) {
  if (d < 1 || w.n() % d != 0) throw InvalidArgument("ghost coordinate needs d | n");
  GreenFunctor q = phi(restrict_to(w, d), d);
  GeometricQuotient g = geometric_quotient(restrict_to(w.mackey(), d), d);
  Vec x = w.mackey().res(w.n(), d) * top;
  return {q.mackey().level(1), q.ring(1), q.mackey().level(1).normal_form(g.quotient.at(d).to_canonical() * x)};
}

// ---------------------------------------------------------------------------
// Cyclotomic comparison

/// Slot maps R(K) -> S(K/m) for every K divisible by m, as matrices on the
/// generators of the (canonical) factors.
using SlotMaps = std::map<long, Matrix>;

/// The level-d chain map X(d) -> Y(d/m) sending [x]_K to [pi x]_{K/m} when
/// m | K and to zero otherwise (before descending to phi).
inline Matrix slot_map_raw(const BoxPresentation& x, const BoxPresentation& y, long m, const SlotMaps& pi, long d) {
  const long dp = d / m;
  Matrix raw(y.raw_dim(dp), x.raw_dim(d));
  for (long k : mackey::divisors(d)) {
    if (k % m != 0) continue;
    const Matrix& p = pi.at(k);
    for (std::size_t t = 0; t < x.block_size(k); ++t) {
      auto tup = detail::decode(t, x.radices(k));
      std::vector<Vec> slots;
      for (std::size_t s : tup) slots.push_back(p.column(s));
      Vec col(y.raw_dim(dp), Int(0));
      y.place(col, dp, k / m, detail::tensor_vectors(slots));
      raw.set_column(x.offset(d, k) + t, col);
    }
  }
  return reduce_columns(y.result().level(dp), y.to_canonical(dp) * raw * x.from_canonical(d));
}

/// phi(X) -> Y induced by slot maps, together with checks that it is a
/// well-defined isomorphism that kills the transfers it must kill.
inline MackeyMorphism slot_map_on_phi(const BoxPresentation& x, const GeometricQuotient& q, const BoxPresentation& y, long m,
                                      const SlotMaps& pi, AxiomReport* rep) {
  MackeyMorphism f;
  for (long dp : mackey::divisors(y.n())) {
    long d = m * dp;
    Matrix chain = slot_map_raw(x, y, m, pi, d);
    const FgAbGroup& quot = q.quotient.at(d);
    f.maps[dp] = reduce_columns(y.result().level(dp), chain * quot.from_canonical());
    if (rep)
      rep->expect(equal_mod(y.result().level(dp), chain, f.maps[dp] * quot.to_canonical()),
                  "tags from levels without C_m vanish at " + std::to_string(d));
  }
  return f;
}

/// Compares phi(HC(R)) with HC(S) degreewise through slot maps pi : R -> S
/// covering phi(R) = S.
inline AxiomReport cyclotomic_compare(const CyclicNerve& big, const CyclicNerve& small, long m, const SlotMaps& pi,
                                      std::size_t degrees) {
  AxiomReport rep;
  if (big.simplicial.n() != m * small.simplicial.n()) throw InvalidArgument("group orders do not match the quotient");
  if (degrees > big.simplicial.max_degree() || degrees > small.simplicial.max_degree())
    throw InvalidArgument("nerves are truncated too early for the comparison");
  std::vector<GeometricQuotient> qs;
  std::vector<MackeyFunctor> phis;
  std::vector<MackeyMorphism> maps;
  for (std::size_t j = 0; j <= degrees; ++j) {
    qs.push_back(geometric_quotient(big.simplicial.objects[j], m));
    phis.push_back(reindex(qs.back().tilde, m));
    maps.push_back(slot_map_on_phi(big.boxes[j], qs.back(), small.boxes[j], m, pi, &rep));
    rep.merge(check_isomorphism(phis.back(), small.simplicial.objects[j], maps.back()));
  }
  for (std::size_t j = 1; j <= degrees; ++j)
    for (std::size_t i = 0; i <= j; ++i) {
      MackeyMorphism pf = phi(big.simplicial.face(j, i), qs[j], qs[j - 1]);
      rep.expect(equal(small.simplicial.objects[j - 1], compose(maps[j - 1], pf), compose(small.simplicial.face(j, i), maps[j])),
                 "face d_" + std::to_string(i) + " in degree " + std::to_string(j));
    }
  for (std::size_t j = 0; j < degrees; ++j)
    for (std::size_t i = 0; i <= j; ++i) {
      MackeyMorphism ps = phi(big.simplicial.degeneracy(j, i), qs[j], qs[j + 1]);
      rep.expect(equal(small.simplicial.objects[j + 1], compose(maps[j + 1], ps), compose(small.simplicial.degeneracy(j, i), maps[j])),
                 "degeneracy s_" + std::to_string(i) + " in degree " + std::to_string(j));
    }
  return rep;
}

/// Slot maps R -> phi(R) given by the quotient, both canonical.
inline SlotMaps quotient_slot_maps(const GreenFunctor& r, long m) {
  GeometricQuotient g = geometric_quotient(r.mackey(), m);
  SlotMaps pi;
  for (long k : r.mackey().divisors())
    if (k % m == 0) pi[k] = g.quotient.at(k).to_canonical();
  return pi;
}

/// Truncation W_<K>(R) -> W_<K/m>(R) between the canonical presentations of
/// two norms (it drops the V_e(1) with e not dividing K/m).
inline SlotMaps norm_truncation(const NormFunctor& big, const NormFunctor& small, long m) {
  SlotMaps pi;
  for (long k : big.mackey().divisors()) {
    if (k % m != 0) continue;
    const auto dk = mackey::divisors(k), ds = mackey::divisors(k / m);
    Matrix p(ds.size(), dk.size());
    for (std::size_t i = 0; i < ds.size(); ++i) p(i, static_cast<std::size_t>(std::find(dk.begin(), dk.end(), ds[i]) - dk.begin())) = 1;
    const FgAbGroup& tgt = small.mackey().level(k / m);
    pi[k] = reduce_columns(tgt.canonical_group(), tgt.to_canonical() * p * big.mackey().level(k).from_canonical());
  }
  return pi;
}

/// phi(N^{C_n} R) -> N^{C_{n/m}} R from the truncation, with its checks:
/// isomorphism of Mackey functors, unit and products preserved.
inline AxiomReport norm_phi_comparison(const BaseRing& ring, long n, long m, MackeyMorphism* out = nullptr) {
  if (m < 1 || n % m != 0) throw InvalidArgument("phi needs m | n");
  NormFunctor big(ring, n), small(ring, n / m);
  GreenFunctor src = big.green().canonicalized(), tgt = small.green().canonicalized();
  GeometricQuotient q = geometric_quotient(src.mackey(), m);
  GreenFunctor ph = phi(src, m);
  SlotMaps pi = norm_truncation(big, small, m);
  MackeyMorphism f;
  AxiomReport rep;
  for (long d : tgt.mackey().divisors()) {
    const FgAbGroup& quot = q.quotient.at(m * d);
    f.maps[d] = reduce_columns(tgt.mackey().level(d), pi.at(m * d) * quot.from_canonical());
    rep.expect(equal_mod(tgt.mackey().level(d), pi.at(m * d), f.maps[d] * quot.to_canonical()),
               "truncation kills transfers at " + std::to_string(m * d));
  }
  rep.merge(check_isomorphism(ph.mackey(), tgt.mackey(), f));
  for (long d : tgt.mackey().divisors()) {
    const FgAbGroup& lv = tgt.mackey().level(d);
    const std::size_t k = ph.mackey().gens(d);
    rep.expect(lv.equal(f.at(d) * ph.unit(d), tgt.unit(d)), "unit preserved at " + std::to_string(d));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        Vec x = unit_vec(k, i), y = unit_vec(k, j);
        rep.expect(lv.equal(f.at(d) * ph.multiply(d, x, y), tgt.multiply(d, f.at(d) * x, f.at(d) * y)),
                   "product preserved at " + std::to_string(d));
      }
  }
  if (out) *out = std::move(f);
  return rep;
}

/// phi(HC(R)) against HC(phi R), for a Green functor R over C_n.
inline AxiomReport cyclotomic_check(const GreenFunctor& r, long m, std::size_t degrees) {
  CyclicNerve big = twisted_cyclic_nerve(r, degrees);
  GreenFunctor pr = phi(big.ring, m);
  CyclicNerve small = twisted_cyclic_nerve(pr, degrees);
  // small.ring is the canonical form of pr; compose the quotient with it
  SlotMaps pi = quotient_slot_maps(big.ring, m);
  for (auto& [k, mat] : pi) mat = reduce_columns(small.ring.mackey().level(k / m), pr.mackey().level(k / m).to_canonical() * mat);
  return cyclotomic_compare(big, small, m, pi, degrees);
}

/// phi(HC^{C_n}(N R)) against HC^{C_{n/m}}(N R) for a trivial-action ring.
inline AxiomReport cyclotomic_check(const BaseRing& ring, long n, long m, std::size_t degrees) {
  if (m < 1 || n % m != 0) throw InvalidArgument("cyclotomic comparison needs m | n");
  NormFunctor big(ring, n), small(ring, n / m);
  CyclicNerve nb = twisted_cyclic_nerve(big.green(), degrees), ns = twisted_cyclic_nerve(small.green(), degrees);
  return cyclotomic_compare(nb, ns, m, norm_truncation(big, small, m), degrees);
}

// ---------------------------------------------------------------------------
// Algebraic TR

struct TrTower {
  long p = 2;
  std::size_t degree = 0;
  std::vector<FgAbGroup> stages;  // stage i is HH_k over C_{p^i}, top level
  std::vector<Matrix> maps;       // maps[i] : stage i+1 -> stage i
  std::vector<bool> unital;       // degree zero: maps[i] preserves the unit
  std::string limit;
  std::size_t precision = 0;
};

inline TrTower tr_tower(const BaseRing& ring, long p, std::size_t stages, std::size_t k) {
  if (!is_prime(p)) throw InvalidArgument("the TR tower needs a prime p");
  if (stages < 1) throw InvalidArgument("the TR tower needs at least one stage");
  TrTower t;
  t.p = p;
  t.degree = k;
  t.precision = stages;
  std::vector<NormFunctor> norms;
  std::vector<CyclicNerve> nerves;
  std::vector<MackeyHomology> hs;
  long n = 1;
  for (std::size_t i = 0; i < stages; ++i, n *= p) {
    norms.emplace_back(ring, n);
    nerves.push_back(twisted_cyclic_nerve(norms.back().green(), k + 1));
    hs.push_back(hh(nerves.back(), k));
    t.stages.push_back(hs.back().functor.level(n));
  }
  n = p;
  for (std::size_t i = 0; i + 1 < stages; ++i, n *= p) {
    SlotMaps pi = norm_truncation(norms[i + 1], norms[i], p);
    Matrix chain = slot_map_raw(nerves[i + 1].boxes[k], nerves[i].boxes[k], p, pi, n);
    Matrix m = induced_on_homology(hs[i + 1].levels.at(n), hs[i].levels.at(n / p), chain);
    t.maps.push_back(m);
    if (k == 0) {
      GreenFunctor a = hh0_green(nerves[i + 1]), b = hh0_green(nerves[i]);
      t.unital.push_back(b.mackey().level(n / p).equal(m * a.unit(n), b.unit(n / p)));
    }
  }
  bool zero = true, cyclic_tower = true, surjective = true;
  Int order = p;
  for (const auto& g : t.stages) {
    zero = zero && g.is_trivial();
    cyclic_tower = cyclic_tower && g.free_rank() == 0 && g.invariant_factors().size() == 1 && g.invariant_factors()[0] == order;
    order *= p;
  }
  for (std::size_t i = 0; i < t.maps.size(); ++i)
    surjective = surjective && cokernel(AbHom{t.stages[i + 1], t.stages[i], t.maps[i]}).is_trivial();
  if (zero) t.limit = "0";
  else if (cyclic_tower && surjective) t.limit = "Z_" + std::to_string(p);
  else t.limit = "undetermined at precision " + std::to_string(stages);
  return t;
}

}  // namespace mackey
