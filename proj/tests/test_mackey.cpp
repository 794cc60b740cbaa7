#include "mackey/mackey.hpp"

#include <gtest/gtest.h>

using namespace mackey;

namespace {

Vec v(std::initializer_list<long> c) {
  Vec out;
  for (long x : c) out.push_back(x);
  return out;
}

// Z[C_2] as a group with the coordinate swap
CnModule swap_module() { return permutation_module(GSet::orbit(2, 1)); }

}  // namespace

TEST(Burnside, TrivialGroup) {
  GreenFunctor a = burnside(1);
  EXPECT_EQ(a.mackey().level(1).str(), "Z");
  EXPECT_EQ(a.unit(1), v({1}));
}

TEST(Burnside, OrderTwo) {
  // basis at the top: index 0 = [C_2] (free orbit), index 1 = [pt]
  GreenFunctor a = burnside(2);
  const MackeyFunctor& m = a.mackey();
  EXPECT_EQ(m.level(2).str(), "Z^2");
  EXPECT_EQ(m.level(1).str(), "Z");
  EXPECT_EQ(m.res_step(2, 1), Matrix::of({{2, 1}}));
  EXPECT_EQ(m.tr_step(1, 2), Matrix::of({{1}, {0}}));
  EXPECT_EQ(a.multiply(2, v({1, 0}), v({1, 0})), v({2, 0}));
  EXPECT_EQ(a.unit(2), v({0, 1}));
  EXPECT_TRUE(check_axioms(a).ok()) << check_axioms(a).str();
}

TEST(Burnside, PrimeOrbitSquare) {
  for (long p : {3L, 5L}) {
    GreenFunctor a = burnside(p);
    EXPECT_EQ(a.multiply(p, v({1, 0}), v({1, 0})), v({p, 0}));
  }
}

TEST(Burnside, ProductRule) {
  // [C_d/C_a][C_d/C_b] = (d/lcm(a,b)) [C_d/C_gcd(a,b)]
  GreenFunctor a = burnside(12);
  auto idx = [](long d, long c) {
    auto ds = divisors(d);
    return static_cast<std::size_t>(std::find(ds.begin(), ds.end(), c) - ds.begin());
  };
  for (long d : divisors(12))
    for (long x : divisors(d))
      for (long y : divisors(d)) {
        std::size_t k = divisors(d).size();
        Vec expect = zero_vec(k);
        expect[idx(d, igcd(x, y))] = d / ilcm(x, y);
        EXPECT_EQ(a.multiply(d, unit_vec(k, idx(d, x)), unit_vec(k, idx(d, y))), expect);
      }
}

TEST(Representable, PointIsBurnside) {
  MackeyFunctor r = representable(GSet::point(4));
  MackeyFunctor b = burnside(4).mackey();
  for (long d : divisors(4)) EXPECT_EQ(r.level(d).str(), b.level(d).str());
}

TEST(Representable, FreeOrbitOfC2) {
  MackeyFunctor r = representable(GSet::orbit(2, 1));
  EXPECT_EQ(r.level(2).str(), "Z");
  EXPECT_EQ(r.level(1).str(), "Z^2");
  EXPECT_TRUE(check_axioms(r).ok());
}

TEST(Representable, Additivity) {
  GSet t1 = GSet::orbit(6, 2), t2 = GSet::orbit(6, 3);
  MackeyFunctor a = representable(GSet::disjoint_union(t1, t2));
  MackeyFunctor b1 = representable(t1), b2 = representable(t2);
  for (long d : divisors(6))
    EXPECT_EQ(a.level(d).free_rank(), b1.level(d).free_rank() + b2.level(d).free_rank());
}

TEST(Representable, RankFormula) {
  // rank of A_{C_n/C_t} at level d is (n / lcm(t, d)) * tau(gcd(t, d))
  for (long n : {4L, 6L, 12L})
    for (long t : divisors(n)) {
      MackeyFunctor r = representable(GSet::orbit(n, t));
      for (long d : divisors(n))
        EXPECT_EQ(r.level(d).free_rank(), static_cast<std::size_t>(n / ilcm(t, d) * divisors(igcd(t, d)).size()));
    }
}

TEST(Representable, Yoneda) {
  CnModule mods[] = {swap_module(), trivial_module(2, FgAbGroup::cyclic(4))};
  for (const auto& mod : mods) {
    MackeyFunctor m = fixed_point_mackey(mod);
    FgAbGroup h = hom_group(representable(GSet::orbit(2, 1)), m);
    EXPECT_TRUE(isomorphic(h, m.level(1))) << h.str();
    FgAbGroup h2 = hom_group(burnside(2).mackey(), m);
    EXPECT_TRUE(isomorphic(h2, m.level(2))) << h2.str();
  }
}

TEST(FixedPoint, TrivialZ) {
  MackeyFunctor m = fixed_point_mackey(trivial_module(2, FgAbGroup::free(1)));
  EXPECT_EQ(m.level(1).str(), "Z");
  EXPECT_EQ(m.level(2).str(), "Z");
  EXPECT_EQ(m.res_step(2, 1), Matrix::of({{1}}));
  EXPECT_EQ(m.tr_step(1, 2), Matrix::of({{2}}));
  EXPECT_EQ(m.weyl(1), Matrix::of({{1}}));
}

TEST(FixedPoint, Swap) {
  std::map<long, Subquotient> lv;
  MackeyFunctor m = fixed_point_mackey(swap_module(), &lv);
  EXPECT_EQ(m.level(2).str(), "Z");
  EXPECT_EQ(m.level(1).str(), "Z^2");
  // top generator is the diagonal; restriction is the diagonal, transfer the sum
  Vec diag = lv.at(2).reps.column(0);
  EXPECT_TRUE(diag == v({1, 1}) || diag == v({-1, -1}));
  Vec r = lv.at(1).reps * m.res_step(2, 1).column(0);
  EXPECT_EQ(r, diag);
  Vec e0 = lv.at(1).class_of(v({1, 0}));
  Vec t = lv.at(2).reps * (m.tr_step(1, 2) * e0);
  EXPECT_EQ(t, v({1, 1}));
  EXPECT_TRUE(check_axioms(m).ok());
}

TEST(FixedPoint, OrderOne) {
  MackeyFunctor m = fixed_point_mackey(trivial_module(1, FgAbGroup::diagonal({Int(2)}, 1)));
  EXPECT_EQ(m.level(1).str(), "Z/2 + Z");
}

TEST(FixedPoint, RejectsBadAction) {
  CnModule bad = swap_module();
  bad.n = 3;
  EXPECT_THROW(fixed_point_mackey(bad), InvalidArgument);
}

TEST(Restrict, Basics) {
  MackeyFunctor b4 = burnside(4).mackey();
  MackeyFunctor same = restrict_to(b4, 4);
  for (long d : divisors(4)) EXPECT_EQ(same.weyl(d), b4.weyl(d));
  MackeyFunctor r = restrict_to(b4, 2);
  EXPECT_EQ(r.level(2).str(), "Z^2");
  EXPECT_EQ(r.level(1).str(), "Z");
  EXPECT_TRUE(check_axioms(r).ok()) << check_axioms(r).str();
  MackeyFunctor s = restrict_to(fixed_point_mackey(swap_module()), 1);
  EXPECT_EQ(s.level(1).str(), "Z^2");
  EXPECT_THROW(restrict_to(b4, 3), InvalidArgument);
}

TEST(Axioms, DetectsBadTransfer) {
  MackeyFunctor m = burnside(2).mackey();
  m.set_tr(1, 2, Matrix::of({{3}, {0}}));
  AxiomReport rep = check_axioms(m);
  EXPECT_FALSE(rep.ok());
  bool found = false;
  for (const auto& f : rep.failures) found = found || f.find("double coset") != std::string::npos;
  EXPECT_TRUE(found);
}

TEST(Axioms, ConstructedFunctorsPass) {
  for (long n = 1; n <= 12; ++n) {
    GreenFunctor b = burnside(n);
    EXPECT_TRUE(check_axioms(b).ok()) << n << check_axioms(b).str();
    for (long t : divisors(n)) EXPECT_TRUE(check_axioms(representable(GSet::orbit(n, t))).ok());
    GreenFunctor f = fixed_point_green(function_ring(GSet::orbit(n, 1)));
    EXPECT_TRUE(check_axioms(f).ok()) << n << check_axioms(f).str();
    EXPECT_TRUE(check_axioms(fixed_point_green(trivial_ring(n, 0))).ok());
    EXPECT_TRUE(check_axioms(fixed_point_green(trivial_ring(n, 6))).ok());
    if (n % 2 == 0) EXPECT_TRUE(check_axioms(fixed_point_green(gaussian_integers_conjugation(n))).ok());
  }
}

TEST(Axioms, FixedPointTrIsIndexOnTrivialModules) {
  for (long n : {4L, 6L, 9L}) {
    MackeyFunctor m = fixed_point_mackey(trivial_module(n, FgAbGroup::free(1)));
    for (auto [d, e] : m.edges())
      EXPECT_EQ(m.tr_step(d, e) * m.res_step(e, d), Matrix::of({{e / d}}));
  }
}

TEST(Axioms, ResTrSumsWeylOrbit) {
  GreenFunctor f = fixed_point_green(function_ring(GSet::orbit(6, 1)));
  const MackeyFunctor& m = f.mackey();
  for (long e : divisors(6))
    for (long d : divisors(e)) {
      Matrix sum(m.gens(d), m.gens(d));
      for (long j = 0; j < e / d; ++j) sum += m.weyl_power(d, (6 / e) * j);
      EXPECT_TRUE(equal_mod(m.level(d), m.res(e, d) * m.tr(d, e), sum));
    }
}
