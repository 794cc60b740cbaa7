#pragma once

// The acceptance suites shared by the CLI `check` command and the acceptance
// runner. Each suite returns an AxiomReport; a suite passes when the report
// has no failures.

#include "mackey/cycmonoid.hpp"
#include "mackey/geomfix.hpp"
#include "mackey/wittgreen.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace mackey::suites {

struct Outcome {
  std::string name;
  std::string title;
  AxiomReport report;
  std::size_t cases = 0;
  double seconds = 0;
};

struct Context {
  std::uint64_t seed = 2024;
  AxiomReport report;
  std::size_t cases = 0;

  void merge(const AxiomReport& r, const std::string& where) {
    report.checks += r.checks;
    for (const auto& f : r.failures) report.failures.push_back(where + ": " + f);
  }
  void expect(bool cond, const std::string& what) { report.expect(cond, what); }
};

struct Suite {
  const char* name;
  const char* title;
  std::function<void(Context&)> run;
};

namespace detail {

inline long ipow(long p, long k) {
  long r = 1;
  while (k-- > 0) r *= p;
  return r;
}

inline double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline std::string cyclic_name(long k) { return "Z/" + std::to_string(k); }

inline bool surjective(const FgAbGroup& src, const FgAbGroup& tgt, const Matrix& m) {
  return cokernel(AbHom{src, tgt, m}).is_trivial();
}

inline bool injective(const FgAbGroup& src, const FgAbGroup& tgt, const Matrix& m) {
  return kernel(AbHom{src, tgt, m}).group.is_trivial();
}

inline std::vector<GreenFunctor> commutative_inputs(long n) {
  std::vector<GreenFunctor> out{burnside(n),
                                fixed_point_green(trivial_ring(n, 0)),
                                fixed_point_green(trivial_ring(n, 6)),
                                fixed_point_green(function_ring(GSet::orbit(n, 1))),
                                NormFunctor(BaseRing::integers(), n).green(),
                                NormFunctor(BaseRing::integers_mod(2), n).green(),
                                monoid_algebra(burnside(n), dual_number_monoid(n))};
  if (n % 2 == 0) {
    out.push_back(fixed_point_green(gaussian_integers_conjugation(n)));
    out.push_back(fixed_point_green(function_ring(GSet::orbit(n, 2))));
    out.push_back(monoid_algebra(fixed_point_green(trivial_ring(n, 0)), swapped_idempotents(n)));
  }
  return out;
}

inline GSet random_set(std::mt19937_64& rng, long n) {
  auto divs = mackey::divisors(n);
  auto orbit = [&] { return GSet::orbit(n, divs[rng() % divs.size()]); };
  GSet s = orbit();
  if (rng() % 2) s = GSet::disjoint_union(s, orbit());
  return s;
}

inline long random_order(std::mt19937_64& rng) { return std::vector<long>{1, 2, 3, 4, 6}[rng() % 5]; }

inline MackeyFunctor random_functor(std::mt19937_64& rng, long n) {
  const Int chars[] = {0, 2, 3, 4};
  switch (rng() % 6) {
    case 0: return fixed_point_mackey(permutation_module(random_set(rng, n), chars[rng() % 4]));
    case 1: return fixed_point_mackey(function_ring(random_set(rng, n), chars[rng() % 4]));
    case 2: return representable(random_set(rng, n));
    case 3: {
      long k = std::vector<long>{1, 2}[rng() % 2];
      return restrict_to(burnside(n * k).mackey(), n);
    }
    case 4:
      if (n % 2 == 0) return fixed_point_mackey(gaussian_integers_conjugation(n));
      return fixed_point_mackey(trivial_module(n, FgAbGroup::cyclic(static_cast<long>(rng() % 5) + 2)));
    default: return NormFunctor(BaseRing::parse(std::vector<const char*>{"Z", "F_2", "F_3", "Z/4"}[rng() % 4]), n).mackey();
  }
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

inline bool unimodular(const Matrix& u) {
  if (u.rows() != u.cols()) return false;
  SmithForm f = snf(u);
  for (std::size_t i = 0; i < u.rows(); ++i)
    if (f.D(i, i) != 1) return false;
  return true;
}

inline bool smith_shape(const Matrix& d) {
  Int prev = 1;
  bool seen_zero = false;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) {
      const Int& x = d(i, j);
      if (i != j) {
        if (x != 0) return false;
        continue;
      }
      if (x < 0) return false;
      if (x == 0) {
        seen_zero = true;
      } else {
        if (seen_zero || !divides(prev, x)) return false;
        prev = x;
      }
    }
  return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline void norm_table(Context& cx) {
  auto t0 = std::chrono::steady_clock::now();
  for (long p : {2L, 3L})
    for (long k = 0; k <= 3; ++k) {
      const long n = detail::ipow(p, k);
      const std::string where = "F_" + std::to_string(p) + " n=" + std::to_string(n);
      MackeyFunctor m = NormFunctor(BaseRing::integers_mod(p), n).mackey().canonicalized();
      ++cx.cases;
      for (long j = 0, d = 1; j <= k; ++j, d *= p) {
        cx.expect(m.level(d).str() == detail::cyclic_name(d * p), where + ": level " + std::to_string(d) + " is " + m.level(d).str());
        cx.expect(m.weyl(d) == Matrix::identity(m.gens(d)), where + ": weyl trivial at " + std::to_string(d));
      }
      for (auto [d, e] : m.edges()) {
        const std::string edge = std::to_string(d) + "|" + std::to_string(e);
        cx.expect(detail::surjective(m.level(e), m.level(d), m.res_step(e, d)), where + ": res surjective " + edge);
        cx.expect(detail::injective(m.level(d), m.level(e), m.tr_step(d, e)), where + ": tr injective " + edge);
        cx.expect(equal_mod(m.level(e), m.tr_step(d, e) * m.res_step(e, d), Int(p) * Matrix::identity(m.gens(e))),
                  where + ": tr res = p on " + edge);
      }
    }
  cx.expect(detail::elapsed(t0) < 1.0, "norm table within one second");
}

inline void twisted_hh(Context& cx) {
  struct Case {
    long p, k;
  };
  for (Case c : {Case{2, 1}, Case{2, 2}, Case{3, 1}}) {
    auto t0 = std::chrono::steady_clock::now();
    const long n = detail::ipow(c.p, c.k);
    const std::string where = "F_" + std::to_string(c.p) + " n=" + std::to_string(n);
    GreenFunctor r = NormFunctor(BaseRing::integers_mod(c.p), n).green();
    CyclicNerve nv = twisted_cyclic_nerve(r, 4);
    MackeyComplex ch = moore_complex(nv.simplicial);
    ++cx.cases;
    cx.merge(check_boundary_squared(ch), where);
    MackeyHomology h0 = homology(ch, 0);
    cx.expect(same_invariants(h0.functor, r.mackey().canonicalized()), where + ": H_0 is the norm");
    for (long j = 0, d = 1; j <= c.k; ++j, d *= c.p)
      cx.expect(h0.functor.level(d).str() == detail::cyclic_name(d * c.p), where + ": H_0 level " + std::to_string(d));
    cx.merge(compare_hh0_with_oracle(r), where);
    for (std::size_t k = 1; k <= 3; ++k) {
      MackeyHomology hk = homology(ch, k);
      for (long d : mackey::divisors(n))
        cx.expect(hk.functor.level(d).is_trivial(), where + ": H_" + std::to_string(k) + " vanishes at " + std::to_string(d));
    }
    cx.expect(detail::elapsed(t0) < 120.0, where + ": within two minutes");
  }
}

inline void witt_comparison(Context& cx) {
  for (const char* r : {"Z", "Z/4", "F_2", "F_3"})
    for (long n : {1L, 2L, 3L, 4L, 6L}) {
      const std::string where = std::string(r) + " n=" + std::to_string(n);
      ClassicalComparison c = compare_with_classical(BaseRing::parse(r), n, 256);
      ++cx.cases;
      cx.merge(c.report, where);
      cx.expect(c.green_group == c.classical_group, where + ": same additive group");
      if (BaseRing::parse(r).has_torsion()) {
        cx.expect(c.search.has_value() && c.search->map.has_value(), where + ": ring isomorphism found by search");
      }
    }
}

inline void hh0_oracle(Context& cx) {
  for (long n = 1; n <= 6; ++n) {
    auto inputs = detail::commutative_inputs(n);
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      ++cx.cases;
      cx.merge(compare_hh0_with_oracle(inputs[i]), "n=" + std::to_string(n) + " input " + std::to_string(i));
    }
  }
}

inline void cyclotomic(Context& cx) {
  struct Case {
    long n, m;
    const char* ring;
  };
  for (Case c : {Case{4, 2, "F_2"}, Case{6, 2, "F_2"}, Case{6, 2, "F_3"}, Case{6, 3, "F_2"}, Case{6, 3, "F_3"}}) {
    ++cx.cases;
    cx.merge(cyclotomic_check(BaseRing::parse(c.ring), c.n, c.m, 2),
             std::string(c.ring) + " n=" + std::to_string(c.n) + " m=" + std::to_string(c.m));
  }
}

inline void tr_towers(Context& cx) {
  for (long p : {2L, 3L}) {
    const BaseRing fp = BaseRing::integers_mod(p);
    const std::string where = "F_" + std::to_string(p);
    TrTower t = tr_tower(fp, p, 3, 0);
    ++cx.cases;
    cx.expect(t.stages.size() == 3 && t.maps.size() == 2, where + ": three stages");
    for (std::size_t i = 0; i < t.stages.size(); ++i)
      cx.expect(t.stages[i].str() == detail::cyclic_name(detail::ipow(p, static_cast<long>(i) + 1)),
                where + ": stage " + std::to_string(i) + " is " + t.stages[i].str());
    for (std::size_t i = 0; i < t.maps.size(); ++i) {
      cx.expect(detail::surjective(t.stages[i + 1], t.stages[i], t.maps[i]), where + ": map " + std::to_string(i) + " surjective");
      cx.expect(t.unital[i], where + ": map " + std::to_string(i) + " unital");
    }
    cx.expect(t.limit == "Z_" + std::to_string(p) && t.precision == 3, where + ": limit " + t.limit);
    for (std::size_t k : {1u, 2u}) {
      TrTower h = tr_tower(fp, p, 3, k);
      ++cx.cases;
      for (const auto& g : h.stages) cx.expect(g.is_trivial(), where + ": degree " + std::to_string(k) + " stage vanishes");
      cx.expect(h.limit == "0", where + ": degree " + std::to_string(k) + " limit " + h.limit);
    }
  }
}

inline void teichmuller_suite(Context& cx) {
  std::mt19937_64 rng(cx.seed);
  struct Case {
    const char* ring;
    long n;
  };
  for (Case c : {Case{"Z", 4}, Case{"Z", 6}, Case{"Z/4", 4}, Case{"Z/8", 2}, Case{"F_2", 4}, Case{"F_2", 6}, Case{"F_3", 3},
                 Case{"F_3", 6}}) {
    ++cx.cases;
    cx.merge(check_teichmuller(BaseRing::parse(c.ring), c.n, 100, rng()), std::string(c.ring) + " n=" + std::to_string(c.n));
  }
}

/// i^* of the C_n nerve on the J-level against sd_r of the C_{n/r} nerve,
/// both carried onto the norm by multiplication.
inline AxiomReport edgewise_case(const BaseRing& ring, long n, long r, std::size_t degrees) {
  AxiomReport rep;
  const long j = n / r;
  NormFunctor big_norm(ring, n), small_norm(ring, j);
  CyclicNerve big = twisted_cyclic_nerve(big_norm.green(), degrees);
  CyclicNerve small = twisted_cyclic_nerve(small_norm.green(), static_cast<std::size_t>(r) * (degrees + 1) - 1);
  rep.expect(identical(restrict_to(big.ring.mackey(), j), small.ring.mackey()), "restricted ring is the smaller norm");
  if (!rep.ok()) return rep;
  SimplicialMackey lhs = restrict_to(big.simplicial, j);
  SimplicialMackey rhs = edgewise_subdivision(small.simplicial, static_cast<std::size_t>(r), degrees);
  rep.merge(check_simplicial_identities(rhs));
  std::vector<MackeyMorphism> al, ar;
  for (std::size_t k = 0; k <= degrees; ++k) {
    MackeyMorphism mu = multiplication(big.boxes[k], big.ring), cut;
    for (long d : mackey::divisors(j)) cut.maps[d] = mu.at(d);
    al.push_back(cut);
    ar.push_back(multiplication(small.boxes[static_cast<std::size_t>(r) * (k + 1) - 1], small.ring));
  }
  rep.merge(check_constant_augmentation(lhs, small.ring.mackey(), al, degrees));
  rep.merge(check_constant_augmentation(rhs, small.ring.mackey(), ar, degrees));
  return rep;
}

inline void edgewise(Context& cx) {
  ++cx.cases;
  cx.merge(edgewise_case(BaseRing::integers_mod(2), 4, 2, 2), "C_4 to C_2, F_2");
  ++cx.cases;
  cx.merge(edgewise_case(BaseRing::integers_mod(2), 6, 2, 1), "C_6 to C_3, F_2");
}

inline void monoid_splitting(Context& cx) {
  GreenFunctor z = fixed_point_green(trivial_ring(1, 0));
  SplittingReport one = splitting_check(z, dual_number_monoid(1), 1);
  ++cx.cases;
  cx.merge(one.report, "n=1");
  cx.expect(one.left[0].level(1).str() == "Z^2", "n=1: H_0 is Z^2");
  // H_0 as a ring is R[M] itself, and R[M] has basis 1, x with x^2 = 0
  GreenFunctor alg = monoid_algebra(z, dual_number_monoid(1));
  cx.merge(compare_hh0_with_oracle(alg), "n=1 ring structure");
  GreenFunctor direct = monoid_algebra_direct(z, dual_number_monoid(1));
  const FgAbGroup& lv = direct.mackey().level(1);
  Vec x = unit_vec(2, 1);
  cx.expect(lv.str() == "Z^2" && direct.unit(1) == unit_vec(2, 0), "n=1: basis 1, x");
  cx.expect(lv.is_zero(direct.multiply(1, x, x)), "n=1: x^2 = 0");
  cx.merge(compare_monoid_algebras(z, dual_number_monoid(1)), "n=1 box form");

  SplittingReport two = splitting_check(burnside(2), dual_number_monoid(2), 0);
  ++cx.cases;
  cx.merge(two.report, "n=2");
}

/// Randomized structural properties with a fixed seed.
inline void structural(Context& cx) {
  std::mt19937_64 rng(cx.seed);
  using detail::random_functor;
  using detail::random_order;

  for (int t = 0; t < 60; ++t, ++cx.cases) {
    std::size_t r = rng() % 5 + 1, c = rng() % 5 + 1;
    Matrix a = detail::random_matrix(rng, r, c, 9);
    SmithForm f = snf(a);
    const std::string where = "snf case " + std::to_string(t);
    cx.expect(f.U * a * f.V == f.D, where + ": U A V = D");
    cx.expect(detail::unimodular(f.U) && detail::unimodular(f.V), where + ": unimodular");
    cx.expect(detail::smith_shape(f.D), where + ": Smith shape");
    FgAbGroup g(c, a);
    Vec v(c);
    for (auto& e : v) e = static_cast<long>(rng() % 19) - 9;
    cx.expect(g.equal(g.from_canonical() * (g.to_canonical() * v), v), where + ": canonical coordinates round trip");
  }

  for (int t = 0; t < 50; ++t, ++cx.cases) {
    long n = random_order(rng);
    MackeyFunctor m = random_functor(rng, n);
    cx.merge(check_axioms(m), "axioms case " + std::to_string(t));
    cx.merge(check_axioms(m.canonicalized()), "canonical axioms case " + std::to_string(t));
  }

  for (int t = 0; t < 25; ++t, ++cx.cases) {
    long n = random_order(rng);
    MackeyFunctor c = random_functor(rng, n).canonicalized();
    BoxPresentation b = box(burnside(n).mackey(), c);
    cx.merge(check_isomorphism(b.result(), c, unit_action(b, c)), "unit case " + std::to_string(t));
  }

  for (int t = 0; t < 25; ++t, ++cx.cases) {
    long n = std::vector<long>{1, 2, 3, 4}[rng() % 4];
    MackeyFunctor a = random_functor(rng, n).canonicalized(), b = random_functor(rng, n).canonicalized();
    BoxPresentation ab = box(a, b), ba = box(b, a);
    cx.merge(check_isomorphism(ab.result(), ba.result(), swap_tags(ab, ba)), "symmetry case " + std::to_string(t));
  }

  for (int t = 0; t < 25; ++t, ++cx.cases) {
    long n = std::vector<long>{1, 2, 3, 4}[rng() % 4];
    MackeyFunctor m = random_functor(rng, n).canonicalized();
    GSet s = GSet::orbit(n, mackey::divisors(n)[rng() % mackey::divisors(n).size()]);
    BoxPresentation b = box(m, representable(s));
    MackeyExtension ext(m, s);
    cx.merge(check_isomorphism(b.result(), ext.result(), box_to_extension(b, ext)), "representable case " + std::to_string(t));
  }

  for (int t = 0; t < 20; ++t, ++cx.cases) {
    long n = std::vector<long>{1, 2, 3, 4, 6}[rng() % 5];
    const std::string where = "nerve case " + std::to_string(t);
    if (t % 2 == 0) {
      auto inputs = detail::commutative_inputs(n);
      CyclicNerve nv = twisted_cyclic_nerve(inputs[rng() % inputs.size()], n <= 3 ? 3 : 2);
      cx.merge(check_simplicial_identities(nv.simplicial), where);
      cx.merge(check_boundary_squared(moore_complex(nv.simplicial)), where);
    } else {
      PointedGMonoid m = n % 2 == 0 && rng() % 2 ? swapped_idempotents(n) : dual_number_monoid(n);
      MonoidNerve nm = cyclic_nerve_monoid(m, 3);
      cx.merge(check_simplicial_identities(nm.simplicial), where);
      cx.merge(check_boundary_squared(cellular_chains(nm.simplicial)), where);
    }
  }
}

inline const std::vector<Suite>& all() {
  static const std::vector<Suite> suites{
      {"norm-table", "norm of F_p: levels, surjective res, injective tr, tr res = p", norm_table},
      {"twisted-hh", "twisted HH of F_p: H_0 is the norm, H_1..H_3 vanish", twisted_hh},
      {"witt-comparison", "HH_0 of the norm nerve against classical Witt vectors", witt_comparison},
      {"hh0-oracle", "HH_0 against the coinvariant quotient, n <= 6", hh0_oracle},
      {"cyclotomic", "geometric fixed points of nerves, degrees <= 2", cyclotomic},
      {"tr-tower", "algebraic TR of F_p", tr_towers},
      {"teichmuller", "Teichmuller map: multiplicative, bottom is r^n", teichmuller_suite},
      {"edgewise", "restricted nerve against edgewise subdivision", edgewise},
      {"monoid-splitting", "HH of monoid algebras against the cellular splitting", monoid_splitting},
      {"structural", "randomized axioms, box product rules, boundaries, SNF", structural},
  };
  return suites;
}

inline const Suite* find(const std::string& name) {
  for (const auto& s : all())
    if (name == s.name) return &s;
  return nullptr;
}

/// Runs one suite; exceptions count as failures.
inline Outcome run(const Suite& s, std::uint64_t seed) {
  Context cx;
  cx.seed = seed;
  auto t0 = std::chrono::steady_clock::now();
  try {
    s.run(cx);
  } catch (const std::exception& e) {
    cx.report.failures.push_back(std::string("exception: ") + e.what());
  }
  return Outcome{s.name, s.title, std::move(cx.report), cx.cases, detail::elapsed(t0)};
}

}  // namespace mackey::suites
