#include "mackey/wittgreen.hpp"

#include <gtest/gtest.h>

using namespace mackey;

TEST(WittGreen, TrivialGroupGivesRing) {
  for (const char* r : {"Z", "Z/6", "F_5"}) {
    GreenWittVectors w = witt_green(BaseRing::parse(r), 1);
    EXPECT_EQ(w.underlying().level(1).str(), BaseRing::parse(r).has_torsion() ? "Z/" + std::to_string(BaseRing::parse(r).modulus()) : "Z");
  }
}

TEST(WittGreen, FpTopLevels) {
  for (long p : {2L, 3L}) {
    long n = 1;
    for (int k = 0; k <= 2; ++k, n *= p)
      EXPECT_EQ(witt_green(BaseRing::integers_mod(p), n).underlying().level(n).str(), "Z/" + std::to_string(n * p));
  }
}

TEST(WittGreen, IntegersAreFreeOfDivisorRank) {
  for (long n : {2L, 3L, 4L, 6L}) {
    GreenWittVectors w = witt_green(BaseRing::integers(), n);
    EXPECT_EQ(w.underlying().level(n).free_rank(), mackey::divisors(n).size());
    EXPECT_TRUE(w.underlying().level(n).invariant_factors().empty());
  }
}

TEST(WittGreen, ClassicalComparison) {
  for (const char* r : {"Z", "Z/4", "F_2", "F_3"})
    for (long n : {1L, 2L, 3L, 4L, 6L}) {
      ClassicalComparison c = compare_with_classical(BaseRing::parse(r), n);
      EXPECT_TRUE(c.report.ok()) << r << " n=" << n << c.report.str();
      EXPECT_EQ(c.green_group, c.classical_group);
    }
}

TEST(WittGreen, IsomorphismSearchBeyondBound) {
  ClassicalComparison c = compare_with_classical(BaseRing::parse("Z/4"), 6, 256);
  ASSERT_TRUE(c.search.has_value());
  EXPECT_TRUE(c.search->map.has_value());
  EXPECT_FALSE(c.search->exhausted);
}

TEST(WittGreen, IsomorphismSearchRejects) {
  // Z/4 and F_2[x]/x^2 share nothing but their size; Z/2 x Z/2 and F_4 share
  // their additive group
  FiniteRing z4{FgAbGroup::cyclic(4), RingStructure{{{Vec{Int(1)}}}, Vec{Int(1)}}};
  FiniteRing f2sq{FgAbGroup::diagonal({2, 2}, 0), RingStructure{{{Vec{1, 0}, Vec{0, 1}}, {Vec{0, 1}, Vec{0, 0}}}, Vec{1, 0}}};
  FiniteRing f2x2{FgAbGroup::diagonal({2, 2}, 0), RingStructure{{{Vec{1, 0}, Vec{0, 0}}, {Vec{0, 0}, Vec{0, 1}}}, Vec{1, 1}}};
  FiniteRing f4{FgAbGroup::diagonal({2, 2}, 0), RingStructure{{{Vec{1, 0}, Vec{0, 1}}, {Vec{0, 1}, Vec{1, 1}}}, Vec{1, 0}}};
  EXPECT_FALSE(find_ring_isomorphism(z4, f2sq).map.has_value());
  EXPECT_FALSE(find_ring_isomorphism(f2sq, f2x2).map.has_value());
  EXPECT_FALSE(find_ring_isomorphism(f2x2, f4).map.has_value());
  EXPECT_TRUE(find_ring_isomorphism(f4, f4).map.has_value());
  EXPECT_TRUE(find_ring_isomorphism(f2x2, f2x2).map.has_value());
}

TEST(WittGreen, Teichmuller) {
  for (auto [r, n] : std::vector<std::pair<const char*, long>>{{"Z/8", 2}, {"Z/8", 4}, {"F_3", 3}, {"F_3", 6}, {"Z", 4}, {"F_2", 4}}) {
    AxiomReport rep = check_teichmuller(BaseRing::parse(r), n, 100, 17);
    EXPECT_TRUE(rep.ok()) << r << " " << n << rep.str();
  }
}

TEST(WittGreen, TeichmullerNaturalInQuotients) {
  for (long m : {4L, 6L})
    for (long n : {2L, 3L}) {
      GreenWittVectors wz = witt_green(BaseRing::integers(), n), wm = witt_green(BaseRing::integers_mod(m), n);
      for (long r = -5; r <= 5; ++r) {
        WittVector a = to_classical(wz, n, teichmuller_green(wz, r));
        WittVector b = to_classical(wm, n, teichmuller_green(wm, r));
        Vec red = a.components();
        for (auto& x : red) x = mod(x, Int(m));
        EXPECT_EQ(red, b.components()) << m << " " << n << " " << r;
      }
    }
}

TEST(WittGreen, GhostOfFpIsQuotient) {
  for (long p : {2L, 3L}) {
    GreenWittVectors w = witt_green(BaseRing::integers_mod(p), p);
    GhostValue g = ghost_coordinate(w, p, w.green.unit(p));
    EXPECT_EQ(g.group.str(), "Z/" + std::to_string(p));
    EXPECT_EQ(w.underlying().level(p).str(), "Z/" + std::to_string(p * p));
  }
}

TEST(WittGreen, GreenInputAccepted) {
  GreenWittVectors w = witt_green(burnside(4));
  EXPECT_TRUE(check_axioms(w.green).ok());
  EXPECT_THROW(teichmuller_green(w, 2), InvalidArgument);
}
