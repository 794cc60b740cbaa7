#include "mackey/geomfix.hpp"

#include <gtest/gtest.h>

using namespace mackey;

namespace {

long ipow(long p, long k) {
  long r = 1;
  while (k-- > 0) r *= p;
  return r;
}

}  // namespace

TEST(TildeEF, BurnsidePrime) {
  for (long p : {2L, 3L, 5L}) {
    MackeyFunctor t = tilde_ef(burnside(p).mackey(), p);
    EXPECT_EQ(t.level(p).str(), "Z");
    EXPECT_TRUE(t.level(1).is_trivial());
    MackeyFunctor ph = phi(burnside(p).mackey(), p);
    EXPECT_EQ(ph.n(), 1);
    EXPECT_EQ(ph.level(1).str(), "Z");
  }
}

TEST(TildeEF, TrivialSubgroupChangesNothing) {
  for (const MackeyFunctor& m : std::vector<MackeyFunctor>{burnside(6).mackey(), fixed_point_mackey(gaussian_integers_conjugation(4)), NormFunctor(BaseRing::parse("F_2"), 4).mackey()})
    EXPECT_TRUE(identical(tilde_ef(m, 1), m.canonicalized()));
}

TEST(TildeEF, Idempotent) {
  for (long n : {2L, 4L, 6L})
    for (long m : mackey::divisors(n)) {
      MackeyFunctor t = tilde_ef(burnside(n).mackey(), m);
      EXPECT_TRUE(identical(tilde_ef(t, m), t)) << n << " " << m;
      MackeyFunctor u = tilde_ef(NormFunctor(BaseRing::integers(), n).mackey(), m);
      EXPECT_TRUE(identical(tilde_ef(u, m), u));
    }
}

TEST(TildeEF, NormOfFp) {
  for (long p : {2L, 3L})
    for (long k = 1; k <= 3; ++k) {
      MackeyFunctor t = tilde_ef(NormFunctor(BaseRing::integers_mod(p), ipow(p, k)).mackey(), p);
      EXPECT_TRUE(t.level(1).is_trivial());
      for (long j = 1; j <= k; ++j) EXPECT_EQ(t.level(ipow(p, j)).str(), "Z/" + std::to_string(ipow(p, j)));
      EXPECT_TRUE(check_axioms(t).ok());
    }
}

TEST(Phi, BurnsideGoesToBurnside) {
  for (long n = 1; n <= 12; ++n)
    for (long m : mackey::divisors(n)) {
      MackeyFunctor ph = phi(burnside(n).mackey(), m);
      EXPECT_TRUE(same_invariants(ph, burnside(n / m).mackey().canonicalized())) << n << " " << m;
      EXPECT_TRUE(check_axioms(phi(burnside(n).mackey(), m)).ok());
    }
}

TEST(Phi, GreenAxiomsDescend) {
  for (long n : {2L, 4L, 6L})
    for (long m : mackey::divisors(n)) {
      EXPECT_TRUE(check_axioms(phi(fixed_point_green(gaussian_integers_conjugation(n)), m)).ok());
      EXPECT_TRUE(check_axioms(phi(NormFunctor(BaseRing::parse("Z/4"), n).green(), m)).ok());
    }
}

TEST(Phi, NormTruncation) {
  struct Case {
    const char* ring;
    long n, m;
  };
  for (Case c : {Case{"F_2", 2, 2}, Case{"F_2", 4, 2}, Case{"F_2", 8, 2}, Case{"F_3", 9, 3}, Case{"F_2", 6, 2}, Case{"F_3", 6, 3},
                 Case{"Z", 4, 2}, Case{"Z", 6, 3}, Case{"Z/4", 4, 2}, Case{"F_2", 4, 4}}) {
    AxiomReport rep = norm_phi_comparison(BaseRing::parse(c.ring), c.n, c.m);
    EXPECT_TRUE(rep.ok()) << c.ring << " " << c.n << " " << c.m << rep.str();
  }
}

TEST(Phi, NormTopMapIsCanonicalQuotient) {
  for (long p : {2L, 3L})
    for (long k = 1; k <= 3; ++k) {
      MackeyMorphism f;
      ASSERT_TRUE(norm_phi_comparison(BaseRing::integers_mod(p), ipow(p, k), p, &f).ok());
      // the unit generates both cyclic groups and goes to the unit
      long top = ipow(p, k - 1);
      EXPECT_EQ(phi(NormFunctor(BaseRing::integers_mod(p), ipow(p, k)).green().canonicalized(), p).mackey().level(top).str(),
                "Z/" + std::to_string(top * p));
    }
}

TEST(Phi, MonoidalOnBoxProducts) {
  for (long n : {2L, 4L, 6L}) {
    std::vector<MackeyFunctor> ms{burnside(n).mackey(), fixed_point_mackey(gaussian_integers_conjugation(n)),
                                  NormFunctor(BaseRing::integers(), n).mackey()};
    for (long m : mackey::divisors(n))
      for (std::size_t a = 0; a < ms.size(); ++a)
        for (std::size_t b = a; b < ms.size(); ++b) {
          MackeyFunctor lhs = phi(box(ms[a], ms[b]).result(), m);
          MackeyFunctor rhs = box(phi(ms[a], m), phi(ms[b], m)).result();
          EXPECT_TRUE(same_invariants(lhs, rhs)) << n << " " << m << " " << a << " " << b;
        }
  }
}

TEST(Phi, BoxFormOfTildeEF) {
  for (long n : {2L, 3L, 4L})
    for (long m : mackey::divisors(n)) {
      MackeyFunctor e = tilde_ef(burnside(n).mackey(), m);
      for (const MackeyFunctor& mf : std::vector<MackeyFunctor>{burnside(n).mackey(), fixed_point_mackey(trivial_module(n, FgAbGroup::free(1))), NormFunctor(BaseRing::integers(), n).mackey()})
        EXPECT_TRUE(same_invariants(tilde_ef(mf, m), box(mf, e).result())) << n << " " << m;
    }
}

TEST(Ghost, TopCoordinateIsGhostComponent) {
  // restricting to C_d and killing transfers reads off gh_{n/d}
  for (long n : {1L, 2L, 3L, 4L, 6L}) {
    NormFunctor nf(BaseRing::integers(), n);
    const GreenFunctor& w = nf.green();
    const auto ds = mackey::divisors(n);
    for (long d : ds) {
      GhostValue one = ghost_coordinate(w, d, w.unit(n));
      ASSERT_EQ(one.group.str(), "Z");
      for (int t = 0; t < 6; ++t) {
        Vec c(ds.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<long>((t * 7 + 3 * i) % 9) - 4;
        GhostValue g = ghost_coordinate(w, d, c);
        Vec gh = ghost(nf.witt(n, c));
        std::size_t idx = static_cast<std::size_t>(std::find(ds.begin(), ds.end(), n / d) - ds.begin());
        EXPECT_EQ(g.value[0], gh[idx] * one.value[0]) << n << " " << d;
      }
    }
  }
}

TEST(Ghost, FpTopIsQuotient) {
  for (long p : {2L, 3L}) {
    NormFunctor nf(BaseRing::integers_mod(p), p);
    GhostValue g = ghost_coordinate(nf.green(), p, nf.green().unit(p));
    EXPECT_EQ(g.group.str(), "Z/" + std::to_string(p));
    EXPECT_FALSE(g.group.is_zero(g.value));
    GhostValue v = ghost_coordinate(nf.green(), p, nf.mackey().tr(1, p) * nf.green().unit(1));
    EXPECT_TRUE(v.group.is_zero(v.value));
  }
}

TEST(Cyclotomic, NormNerves) {
  struct Case {
    long n, m;
    const char* ring;
  };
  for (Case c : {Case{4, 2, "F_2"}, Case{6, 2, "F_2"}, Case{6, 3, "F_3"}, Case{6, 2, "F_3"}, Case{6, 3, "F_2"}}) {
    AxiomReport rep = cyclotomic_check(BaseRing::parse(c.ring), c.n, c.m, 2);
    EXPECT_TRUE(rep.ok()) << c.n << " " << c.m << " " << c.ring << rep.str();
  }
}

TEST(Cyclotomic, TrivialSubgroup) {
  EXPECT_TRUE(cyclotomic_check(BaseRing::integers_mod(2), 4, 1, 2).ok());
  EXPECT_TRUE(cyclotomic_check(burnside(4), 1, 2).ok());
}

TEST(Cyclotomic, GreenInput) {
  for (const auto& r : {burnside(4), fixed_point_green(gaussian_integers_conjugation(4)), fixed_point_green(gaussian_integers_conjugation(2))}) {
    AxiomReport rep = cyclotomic_check(r, 2, 2);
    EXPECT_TRUE(rep.ok()) << rep.str();
  }
  EXPECT_TRUE(cyclotomic_check(burnside(6), 3, 1).ok());
}

TEST(Edgewise, RestrictedNerveIsSubdivision) {
  NormFunctor n4(BaseRing::integers_mod(2), 4), n2(BaseRing::integers_mod(2), 2);
  CyclicNerve big = twisted_cyclic_nerve(n4.green(), 2);
  CyclicNerve small = twisted_cyclic_nerve(n2.green(), 5);
  ASSERT_TRUE(identical(restrict_to(big.ring.mackey(), 2), small.ring.mackey()));
  SimplicialMackey lhs = restrict_to(big.simplicial, 2);
  SimplicialMackey rhs = edgewise_subdivision(small.simplicial, 2, 2);
  std::vector<MackeyMorphism> al, ar;
  for (std::size_t j = 0; j <= 2; ++j) {
    MackeyMorphism mu = multiplication(big.boxes[j], big.ring), cut;
    for (long d : mackey::divisors(2)) cut.maps[d] = mu.at(d);
    al.push_back(cut);
    ar.push_back(multiplication(small.boxes[2 * j + 1], small.ring));
  }
  AxiomReport a = check_constant_augmentation(lhs, small.ring.mackey(), al, 2);
  AxiomReport b = check_constant_augmentation(rhs, small.ring.mackey(), ar, 2);
  EXPECT_TRUE(a.ok()) << a.str();
  EXPECT_TRUE(b.ok()) << b.str();
}

TEST(Tr, FpDegreeZero) {
  for (long p : {2L, 3L}) {
    TrTower t = tr_tower(BaseRing::integers_mod(p), p, 3, 0);
    ASSERT_EQ(t.stages.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(t.stages[i].str(), "Z/" + std::to_string(ipow(p, static_cast<long>(i) + 1)));
    ASSERT_EQ(t.maps.size(), 2u);
    for (std::size_t i = 0; i < 2; ++i) {
      EXPECT_TRUE(cokernel(AbHom{t.stages[i + 1], t.stages[i], t.maps[i]}).is_trivial());
      EXPECT_TRUE(t.unital[i]);
    }
    EXPECT_EQ(t.limit, "Z_" + std::to_string(p));
    EXPECT_EQ(t.precision, 3u);
  }
}

TEST(Tr, FpHigherDegreesVanish) {
  for (std::size_t k : {1u, 2u}) {
    TrTower t = tr_tower(BaseRing::integers_mod(2), 2, 3, k);
    for (const auto& g : t.stages) EXPECT_TRUE(g.is_trivial());
    EXPECT_EQ(t.limit, "0");
  }
  EXPECT_THROW(tr_tower(BaseRing::integers_mod(2), 4, 2, 0), InvalidArgument);
}
