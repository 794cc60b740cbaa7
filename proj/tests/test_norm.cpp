#include "mackey/norm.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace mackey;

TEST(Norm, FpTable) {
  for (long p : {2L, 3L})
    for (long k = 0; k <= 3; ++k) {
      long n = 1;
      for (long i = 0; i < k; ++i) n *= p;
      NormFunctor nf(BaseRing::integers_mod(p), n);
      MackeyFunctor m = nf.mackey().canonicalized();
      for (long j = 0, d = 1; j <= k; ++j, d *= p) {
        EXPECT_EQ(m.level(d).str(), "Z/" + std::to_string(d * p));
        EXPECT_EQ(m.weyl(d), Matrix::identity(1));
      }
      for (auto [d, e] : m.edges()) {
        AbHom res{m.level(e), m.level(d), m.res_step(e, d)}, tr{m.level(d), m.level(e), m.tr_step(d, e)};
        EXPECT_TRUE(cokernel(res).is_trivial());
        EXPECT_TRUE(kernel(tr).group.is_trivial());
        EXPECT_TRUE(equal_mod(m.level(e), m.tr_step(d, e) * m.res_step(e, d), Matrix::of({{p}})));
      }
    }
}

TEST(Norm, TrivialGroup) {
  EXPECT_EQ(NormFunctor(BaseRing::parse("Z/6"), 1).mackey().level(1).canonical_group().str(), "Z/6");
  EXPECT_EQ(NormFunctor(BaseRing::integers(), 1).mackey().level(1).str(), "Z");
}

TEST(Norm, IntegersOrderTwo) {
  // F_2(a_1, a_2) = a_1^2 + 2 a_2 and V_2(b) = (0, b)
  NormFunctor nf(BaseRing::integers(), 2);
  std::mt19937 rng(3);
  for (int t = 0; t < 20; ++t) {
    Int a1 = static_cast<long>(rng() % 21) - 10, a2 = static_cast<long>(rng() % 21) - 10;
    WittVector w(TruncationSet::divisors_of(2), BaseRing::integers(), Vec{a1, a2});
    Vec c = nf.coords(2, w);
    Vec res = nf.mackey().res_step(2, 1) * c;
    EXPECT_EQ(nf.witt(1, res)[1], a1 * a1 + 2 * a2);
    EXPECT_EQ(nf.witt(2, nf.mackey().tr_step(1, 2) * Vec{a1}), (WittVector(TruncationSet::divisors_of(2), BaseRing::integers(), Vec{0, a1})));
  }
  EXPECT_EQ(nf.mackey().level(2).str(), "Z^2");
}

TEST(Norm, AxiomsAllSmallGroups) {
  for (long n = 1; n <= 12; ++n)
    for (const char* r : {"Z", "F_2", "F_3", "Z/4"}) {
      if (n > 6 && std::string(r) == "Z/4") continue;
      NormFunctor nf(BaseRing::parse(r), n);
      AxiomReport rep = check_axioms(nf.green());
      EXPECT_TRUE(rep.ok()) << r << " n=" << n << rep.str();
    }
}

TEST(Norm, CoordinatesRoundTrip) {
  for (const char* r : {"Z", "Z/4", "F_3"}) {
    NormFunctor nf(BaseRing::parse(r), 6);
    std::mt19937 rng(11);
    for (int t = 0; t < 10; ++t) {
      Vec comps(4);
      for (auto& c : comps) c = static_cast<long>(rng() % 7) - 3;
      WittVector w(TruncationSet::divisors_of(6), BaseRing::parse(r), comps);
      EXPECT_EQ(nf.witt(6, nf.coords(6, w)), w);
    }
  }
}

TEST(Norm, MultiplicationMatchesWitt) {
  for (const char* r : {"Z", "Z/4", "F_2"}) {
    NormFunctor nf(BaseRing::parse(r), 4);
    const auto& ring = nf.green().ring(4);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) {
        Vec x = unit_vec(3, a), y = unit_vec(3, b);
        EXPECT_EQ(nf.witt(4, ring.multiply(x, y)), witt_mul(nf.witt(4, x), nf.witt(4, y)));
      }
  }
}

TEST(Norm, ExternalNormElement) {
  NormFunctor nf(BaseRing::integers(), 6);
  EXPECT_EQ(external_norm_element(nf, 1), nf.green().unit(6));
  for (long r : {2L, -3L, 5L}) {
    Vec x = external_norm_element(nf, r);
    Vec bottom = nf.mackey().res(6, 1) * x;
    EXPECT_EQ(bottom, Vec{Int(r) * r * r * r * r * r});
  }
  NormFunctor f2(BaseRing::integers_mod(2), 2);
  Vec one = external_norm_element(f2, 1);
  EXPECT_EQ(f2.mackey().level(2).element_order(one), 4);
}

TEST(Norm, RestrictionIdentity) {
  struct Case {
    const char* ring;
    long n, j;
  };
  for (Case c : {Case{"F_2", 4, 2}, Case{"F_2", 4, 4}, Case{"F_3", 3, 1}, Case{"F_2", 2, 1}, Case{"Z", 4, 2}, Case{"Z", 6, 3},
                 Case{"Z/4", 2, 1}}) {
    AxiomReport rep = check_norm_restriction_identity(BaseRing::parse(c.ring), c.n, c.j);
    EXPECT_TRUE(rep.ok()) << c.ring << " " << c.n << " " << c.j << rep.str();
  }
}

TEST(Norm, BoxIdempotentForFp) {
  GreenFunctor r = NormFunctor(BaseRing::integers_mod(2), 2).green().canonicalized();
  BoxPresentation b = box_power(r, 2);
  EXPECT_EQ(b.result().level(2).str(), "Z/4");
}
