#pragma once

// Witt vectors of a Green functor as HH_0 of its twisted cyclic nerve, with
// ghost coordinates, Teichmüller lifts and the comparison with classical
// Witt vectors for norms of trivial-action rings.

#include "mackey/geomfix.hpp"

#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>

namespace mackey {

struct GreenWittVectors {
  std::string source;
  std::optional<NormFunctor> norm;  // set for rings with trivial action
  CyclicNerve nerve;
  MackeyHomology h0;
  GreenFunctor green;
  MackeyMorphism mu;  // R^{[]1} -> R

  long n() const { return green.n(); }
  const MackeyFunctor& underlying() const { return green.mackey(); }
};

inline GreenWittVectors witt_green(const GreenFunctor& r, std::string source = "Green functor") {
  GreenWittVectors w;
  w.source = std::move(source);
  w.nerve = twisted_cyclic_nerve(r, 1);
  w.h0 = hh(w.nerve, 0);
  w.green = homology_ring(w.h0, w.nerve.boxes[0].green());
  w.mu = multiplication(w.nerve.boxes[0], w.nerve.ring);
  return w;
}

inline GreenWittVectors witt_green(const BaseRing& ring, long n) {
  NormFunctor nf(ring, n);
  GreenWittVectors w = witt_green(nf.green(), "norm of " + ring.name() + " to C_" + std::to_string(n));
  w.norm = std::move(nf);
  return w;
}

/// HH_0 class of the tag [x]_d for x in the canonical ring at level d.
inline Vec class_of_element(const GreenWittVectors& w, long d, const Vec& x) {
  const BoxPresentation& b = w.nerve.boxes[0];
  Vec raw(b.raw_dim(d), Int(0));
  b.place(raw, d, d, x);
  return w.h0.levels.at(d).class_of(b.to_canonical(d) * raw);
}

/// The element of the canonical ring at level d represented by an HH_0 class.
inline Vec element_of_class(const GreenWittVectors& w, long d, const Vec& c) {
  return w.nerve.ring.mackey().level(d).normal_form(w.mu.at(d) * (w.h0.levels.at(d).reps * c));
}

/// Classical Witt vector in W_<d>(R) of an HH_0 class of a norm.
inline WittVector to_classical(const GreenWittVectors& w, long d, const Vec& c) {
  if (!w.norm) throw InvalidArgument("classical comparison needs a norm of a ring");
  return w.norm->witt(d, w.norm->mackey().level(d).from_canonical() * element_of_class(w, d, c));
}

inline Vec from_classical(const GreenWittVectors& w, long d, const WittVector& v) {
  if (!w.norm) throw InvalidArgument("classical comparison needs a norm of a ring");
  return class_of_element(w, d, w.norm->mackey().level(d).to_canonical() * w.norm->coords(d, v));
}

/// Multiplicative lift of r to the top level.
inline Vec teichmuller_green(const GreenWittVectors& w, const Int& r) {
  if (!w.norm) throw InvalidArgument("Teichmüller lifts need a norm of a ring");
  const long n = w.n();
  return class_of_element(w, n, w.norm->mackey().level(n).to_canonical() * external_norm_element(*w.norm, r));
}

inline GhostValue ghost_coordinate(const GreenWittVectors& w, long d, const Vec& top) {
  return ghost_coordinate(w.green, d, top);
}

// ---------------------------------------------------------------------------
// Finite rings and isomorphism search

/// A finite commutative ring on a canonical presentation of its additive group.
struct FiniteRing {
  FgAbGroup group;
  RingStructure ring;

  std::size_t size() const { return static_cast<std::size_t>(group.order().get_ui()); }

  std::vector<Vec> elements() const {
    std::vector<Vec> out{Vec(group.ngens(), Int(0))};
    for (std::size_t i = 0; i < group.ngens(); ++i) {
      std::vector<Vec> next;
      for (const auto& e : out)
        for (Int a = 0; a < group.invariant_factors()[i]; ++a) {
          Vec x = e;
          x[i] = a;
          next.push_back(std::move(x));
        }
      out = std::move(next);
    }
    return out;
  }
};

inline FiniteRing finite_ring(const FgAbGroup& g, const RingStructure& r) {
  if (g.free_rank() != 0) throw InvalidArgument("ring is not finite");
  FiniteRing out;
  out.group = g.canonical_group();
  const std::size_t k = out.group.ngens();
  out.ring.products.assign(k, std::vector<Vec>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      out.ring.products[i][j] =
          out.group.normal_form(g.to_canonical() * r.multiply(g.from_canonical().column(i), g.from_canonical().column(j)));
  out.ring.unit = out.group.normal_form(g.to_canonical() * r.unit);
  return out;
}

struct IsomorphismSearch {
  std::optional<Matrix> map;  // images of the generators of the source as columns
  std::size_t nodes = 0;
  bool exhausted = false;  // the node budget ran out before a decision
};

/// Backtracking over images of generators; products are checked as soon as
/// every generator they involve has an image.
inline IsomorphismSearch find_ring_isomorphism(const FiniteRing& a, const FiniteRing& b, std::size_t budget = 1000000) {
  IsomorphismSearch res;
  if (!a.group.same_canonical_form(b.group)) return res;
  const std::size_t k = a.group.ngens();
  const auto& ord = a.group.invariant_factors();
  std::vector<Vec> targets = b.elements();
  std::vector<std::vector<Vec>> cand(k);
  for (std::size_t i = 0; i < k; ++i)
    for (const auto& y : targets)
      if (b.group.element_order(y) == ord[i]) cand[i].push_back(y);
  // highest generator index involved in each product
  auto last_index = [&](std::size_t i, std::size_t j) {
    std::size_t m = std::max(i, j);
    const Vec& p = a.ring.products[i][j];
    for (std::size_t t = 0; t < k; ++t)
      if (p[t] != 0) m = std::max(m, t);
    return m;
  };
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> checks(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) checks[last_index(i, j)].emplace_back(i, j);
  Matrix img(b.group.ngens(), k);
  auto apply = [&](const Vec& x) { return b.group.normal_form(img * x); };
  std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
    if (i == k) {
      if (!b.group.equal(apply(a.ring.unit), b.ring.unit)) return false;
      // equal finite orders, so onto means bijective
      return cokernel(AbHom{a.group, b.group, img}).is_trivial();
    }
    for (const auto& y : cand[i]) {
      if (++res.nodes > budget) {
        res.exhausted = true;
        return false;
      }
      img.set_column(i, y);
      bool ok = true;
      for (auto [p, q] : checks[i]) {
        Vec lhs = apply(a.ring.products[p][q]);
        Vec rhs = b.ring.multiply(img.column(p), img.column(q));
        if (!b.group.equal(lhs, rhs)) {
          ok = false;
          break;
        }
      }
      if (ok && go(i + 1)) return true;
      if (res.exhausted) return false;
    }
    return false;
  };
  if (go(0)) res.map = img;
  return res;
}

/// The classical W_<d>(R) as a ring on the V_e(1) presentation, products by
/// Witt multiplication.
inline std::pair<FgAbGroup, RingStructure> classical_witt_ring(const NormFunctor& nf, long d) {
  const FgAbGroup& g = nf.mackey().level(d);
  const std::size_t k = g.ngens();
  RingStructure r;
  r.products.assign(k, std::vector<Vec>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      r.products[i][j] = nf.coords(d, witt_mul(nf.witt(d, unit_vec(k, i)), nf.witt(d, unit_vec(k, j))));
  r.unit = nf.coords(d, witt_one(TruncationSet::divisors_of(d), nf.ring()));
  return {g, r};
}

struct ClassicalComparison {
  AxiomReport report;
  std::string green_group;
  std::string classical_group;
  std::optional<IsomorphismSearch> search;  // finite rings only
};

/// HH_0 of the nerve on N^{C_n} R at the top against W_<n>(R).
inline ClassicalComparison compare_with_classical(const BaseRing& ring, long n, std::size_t search_limit = 81) {
  ClassicalComparison out;
  AxiomReport& rep = out.report;
  GreenWittVectors w = witt_green(ring, n);
  const NormFunctor& nf = *w.norm;
  const FgAbGroup& top = w.underlying().level(n);
  auto [cg, cr] = classical_witt_ring(nf, n);
  out.green_group = top.str();
  out.classical_group = cg.canonical_group().str();
  rep.expect(top.same_canonical_form(cg), "additive groups agree");
  const std::size_t k = top.ngens();
  std::vector<WittVector> images;
  for (std::size_t i = 0; i < k; ++i) images.push_back(to_classical(w, n, unit_vec(k, i)));
  auto image_of = [&](const Vec& c) {
    WittVector acc = witt_zero(TruncationSet::divisors_of(n), ring);
    for (std::size_t i = 0; i < k; ++i) {
      WittVector term = images[i];
      Int m = c[i];
      WittVector sum = witt_zero(TruncationSet::divisors_of(n), ring);
      while (m > 0) {
        if (m % 2 == 1) sum = witt_add(sum, term);
        term = witt_add(term, term);
        m /= 2;
      }
      acc = witt_add(acc, sum);
    }
    return acc;
  };
  rep.expect(to_classical(w, n, w.green.unit(n)) == witt_one(TruncationSet::divisors_of(n), ring), "unit goes to the unit");
  if (ring.has_torsion()) {
    FiniteRing fa = finite_ring(top, w.green.ring(n));
    std::set<std::vector<Int>> seen;
    for (const auto& e : fa.elements()) {
      WittVector v = image_of(e);
      seen.insert(v.components());
      rep.expect(top.equal(from_classical(w, n, v), e), "classical round trip");
    }
    rep.expect(seen.size() == fa.size() && Int(static_cast<long>(fa.size())) == cg.order(), "comparison map is bijective");
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        rep.expect(to_classical(w, n, w.green.multiply(n, unit_vec(k, i), unit_vec(k, j))) == witt_mul(images[i], images[j]),
                   "comparison map is multiplicative");
    FiniteRing fb = finite_ring(cg, cr);
    if (fa.size() <= search_limit) {
      out.search = find_ring_isomorphism(fa, fb);
      rep.expect(out.search->map.has_value(), "abstract ring isomorphism found");
    }
  } else {
    // over Z the ghost map is an injective ring map
    for (std::size_t i = 0; i < k; ++i) {
      rep.expect(top.equal(from_classical(w, n, images[i]), unit_vec(k, i)), "classical round trip");
      for (std::size_t j = 0; j < k; ++j) {
        Vec lhs = ghost(to_classical(w, n, w.green.multiply(n, unit_vec(k, i), unit_vec(k, j))));
        Vec gi = ghost(images[i]), gj = ghost(images[j]);
        for (std::size_t t = 0; t < gi.size(); ++t) gi[t] *= gj[t];
        rep.expect(lhs == gi, "ghost components multiply");
      }
    }
    // surjective: the V_e(1) generate W_<n>(Z) and each has a preimage
    const auto ds = mackey::divisors(n);
    for (std::size_t i = 0; i < ds.size(); ++i) {
      WittVector v = nf.witt(n, unit_vec(ds.size(), i));
      rep.expect(to_classical(w, n, from_classical(w, n, v)) == v, "generator V_" + std::to_string(ds[i]) + "(1) is hit");
    }
  }
  return out;
}

/// Teichmüller lifts: multiplicative, unital, lift the n-th power at the
/// bottom and the (n/d)-th power under phi_{C_d}.
inline AxiomReport check_teichmuller(const BaseRing& ring, long n, std::size_t pairs, std::uint64_t seed) {
  AxiomReport rep;
  GreenWittVectors w = witt_green(ring, n);
  const FgAbGroup& top = w.underlying().level(n);
  std::mt19937_64 rng(seed);
  const long span = ring.has_torsion() ? ring.modulus() : 7;
  auto draw = [&]() -> Int {
    long v = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * span + 1)) - span;
    return ring.reduce(Int(v));
  };
  rep.expect(top.equal(teichmuller_green(w, 1), w.green.unit(n)), "t(1) = 1");
  rep.expect(top.is_zero(teichmuller_green(w, 0)), "t(0) = 0");
  for (std::size_t t = 0; t < pairs; ++t) {
    Int r = draw(), s = draw();
    rep.expect(top.equal(teichmuller_green(w, ring.reduce(r * s)), w.green.multiply(n, teichmuller_green(w, r), teichmuller_green(w, s))),
               "t(rs) = t(r) t(s)");
  }
  for (int t = 0; t < 8; ++t) {
    Int r = draw();
    Vec x = teichmuller_green(w, r);
    Vec bottom = w.underlying().res(n, 1) * x;
    WittVector b = to_classical(w, 1, bottom);
    rep.expect(b.components()[0] == ring.reduce(pow(r, static_cast<unsigned long>(n))), "bottom restriction is r^n");
    for (long d : mackey::divisors(n)) {
      GhostValue one = ghost_coordinate(w, d, w.green.unit(n));
      GhostValue g = ghost_coordinate(w, d, x);
      Vec expect = one.value;
      Int e = pow(r, static_cast<unsigned long>(n / d));
      for (auto& c : expect) c *= e;
      rep.expect(one.group.equal(g.value, expect), "phi_C" + std::to_string(d) + " of t(r) is r^" + std::to_string(n / d));
    }
  }
  return rep;
}

}  // namespace mackey
