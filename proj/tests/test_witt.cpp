#include "mackey/witt.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace mackey;

namespace {

const BaseRing ZZ = BaseRing::integers();

WittVector zvec(long n, std::initializer_list<long> c) {
  Vec v;
  for (long x : c) v.push_back(x);
  return WittVector(TruncationSet::divisors_of(n), ZZ, v);
}

Vec ints(std::initializer_list<long> c) {
  Vec v;
  for (long x : c) v.push_back(x);
  return v;
}

WittVector random_vector(std::mt19937_64& rng, const TruncationSet& s, const BaseRing& r, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  Vec v;
  for (std::size_t i = 0; i < s.size(); ++i) v.push_back(dist(rng));
  return WittVector(s, r, v);
}

}  // namespace

TEST(Truncation, DivisorClosed) {
  EXPECT_EQ(TruncationSet::divisors_of(12).elements(), (std::vector<long>{1, 2, 3, 4, 6, 12}));
  EXPECT_THROW(TruncationSet({1, 4}), InvalidArgument);
  EXPECT_EQ(TruncationSet::divisors_of(12).quotient(2).elements(), (std::vector<long>{1, 2, 3, 6}));
}

TEST(BaseRingParse, Names) {
  EXPECT_EQ(BaseRing::parse("Z").name(), "Z");
  EXPECT_EQ(BaseRing::parse("Z/4").modulus(), 4);
  EXPECT_EQ(BaseRing::parse("F_3").name(), "F_3");
  EXPECT_THROW(BaseRing::parse("F_4"), InvalidArgument);
  EXPECT_THROW(BaseRing::parse("Q"), InvalidArgument);
  EXPECT_THROW(BaseRing::parse("Z/1"), InvalidArgument);
}

TEST(Ghost, Examples) {
  EXPECT_EQ(ghost(zvec(2, {2, 0})), ints({2, 4}));
  EXPECT_EQ(ghost(zvec(2, {0, 0})), ints({0, 0}));
  EXPECT_EQ(ghost(zvec(2, {0, 1})), ints({0, 2}));
  EXPECT_THROW(ghost(WittVector(TruncationSet::divisors_of(2), BaseRing::integers_mod(2))),
               InvalidArgument);
}

TEST(WittArithmetic, Examples) {
  EXPECT_EQ(witt_add(zvec(2, {1, 0}), zvec(2, {1, 0})), zvec(2, {2, -1}));
  auto s6 = TruncationSet::divisors_of(6);
  EXPECT_EQ(witt_mul(teichmuller(2, s6, ZZ), teichmuller(3, s6, ZZ)), teichmuller(6, s6, ZZ));
  WittVector a = zvec(6, {3, -1, 2, 5});
  EXPECT_EQ(witt_add(a, witt_zero(s6, ZZ)), a);
  EXPECT_EQ(witt_mul(a, witt_one(s6, ZZ)), a);
  auto g = ghost(teichmuller(3, s6, ZZ));
  for (std::size_t i = 0; i < s6.size(); ++i) EXPECT_EQ(g[i], pow(Int(3), s6.elements()[i]));
}

TEST(WittArithmetic, FrobeniusVerschiebung) {
  auto s2 = TruncationSet::divisors_of(2);
  EXPECT_EQ(frobenius(2, teichmuller(3, s2, ZZ)), teichmuller(9, TruncationSet::divisors_of(1), ZZ));
  EXPECT_EQ(frobenius(1, zvec(2, {4, 7})), zvec(2, {4, 7}));
  EXPECT_EQ(verschiebung(2, witt_one(TruncationSet::divisors_of(1), ZZ), s2), zvec(2, {0, 1}));
  EXPECT_EQ(verschiebung(1, zvec(2, {4, 7}), s2), zvec(2, {4, 7}));
}

TEST(WittProperty, GhostIsRingHom) {
  std::mt19937_64 rng(2024);
  for (long n = 1; n <= 12; ++n) {
    auto s = TruncationSet::divisors_of(n);
    for (int t = 0; t < 5; ++t) {
      WittVector a = random_vector(rng, s, ZZ, 5), b = random_vector(rng, s, ZZ, 5);
      Vec ga = ghost(a), gb = ghost(b), gs = ghost(witt_add(a, b)), gp = ghost(witt_mul(a, b));
      for (std::size_t i = 0; i < s.size(); ++i) {
        EXPECT_EQ(gs[i], ga[i] + gb[i]);
        EXPECT_EQ(gp[i], ga[i] * gb[i]);
      }
    }
  }
}

TEST(WittProperty, FrobeniusVerschiebungIdentities) {
  std::mt19937_64 rng(99);
  for (long p : {2L, 3L}) {
    auto s = TruncationSet::divisors_of(p * p);
    auto q = s.quotient(p);
    for (int t = 0; t < 10; ++t) {
      WittVector x = random_vector(rng, q, ZZ, 5);
      WittVector px = witt_zero(q, ZZ);
      for (long k = 0; k < p; ++k) px = witt_add(px, x);
      EXPECT_EQ(frobenius(p, verschiebung(p, x, s)), px);
    }
  }
  auto s4 = TruncationSet::divisors_of(4);
  for (long r : {2L, 4L}) {
    auto q = s4.quotient(r);
    for (int t = 0; t < 10; ++t) {
      WittVector x = random_vector(rng, s4, ZZ, 5), y = random_vector(rng, q, ZZ, 5);
      EXPECT_EQ(witt_mul(x, verschiebung(r, y, s4)), verschiebung(r, witt_mul(frobenius(r, x), y), s4));
    }
  }
}

TEST(WittModular, AgreesWithIntegerReduction) {
  std::mt19937_64 rng(5);
  auto z4 = BaseRing::integers_mod(4);
  for (long n : {2L, 4L, 6L}) {
    auto s = TruncationSet::divisors_of(n);
    for (int t = 0; t < 10; ++t) {
      WittVector a = random_vector(rng, s, ZZ, 6), b = random_vector(rng, s, ZZ, 6);
      auto red = [&](const WittVector& w) { return WittVector(s, z4, w.components()); };
      EXPECT_EQ(witt_add(red(a), red(b)), red(witt_add(a, b)));
      EXPECT_EQ(witt_mul(red(a), red(b)), red(witt_mul(a, b)));
      for (long r : divisors(n)) EXPECT_EQ(frobenius(r, red(a)), WittVector(s.quotient(r), z4, frobenius(r, a).components()));
    }
  }
}

TEST(WittModular, FpTruncatedGroups) {
  // W_<p^k>(F_p) is cyclic of order p^(k+1), generated by 1
  for (long p : {2L, 3L})
    for (long k = 0; k <= 3; ++k) {
      long n = 1;
      for (long i = 0; i < k; ++i) n *= p;
      auto s = TruncationSet::divisors_of(n);
      auto fp = BaseRing::integers_mod(p);
      WittVector one = witt_one(s, fp), acc = one;
      long order = 1;
      while (!(acc == witt_zero(s, fp))) acc = witt_add(acc, one), ++order;
      long expect = n * p;
      EXPECT_EQ(order, expect);
      if (n <= 9) {
        auto e = enumerate_witt_group(s, fp);
        EXPECT_EQ(e.group.str(), "Z/" + std::to_string(expect));
      }
    }
  auto e = enumerate_witt_group(TruncationSet::divisors_of(2), BaseRing::integers_mod(2));
  EXPECT_EQ(e.coordinates.size(), 4u);
  EXPECT_EQ(e.group.str(), "Z/4");
}
