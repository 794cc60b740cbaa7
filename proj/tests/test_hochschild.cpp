#include "mackey/hochschild.hpp"
#include "mackey/norm.hpp"

#include <gtest/gtest.h>

using namespace mackey;

namespace {

long ipow(long p, long k) {
  long r = 1;
  while (k-- > 0) r *= p;
  return r;
}

GreenFunctor fp_norm(long p, long n) { return NormFunctor(BaseRing::integers_mod(p), n).green(); }

std::vector<GreenFunctor> commutative_samples(long n) {
  std::vector<GreenFunctor> out{burnside(n), fixed_point_green(trivial_ring(n, 0)), fixed_point_green(trivial_ring(n, 6)),
                                fixed_point_green(function_ring(GSet::orbit(n, 1))),
                                NormFunctor(BaseRing::integers(), n).green(), fp_norm(2, n)};
  if (n % 2 == 0) out.push_back(fixed_point_green(gaussian_integers_conjugation(n)));
  if (n % 2 == 0) out.push_back(fixed_point_green(function_ring(GSet::orbit(n, 2))));
  return out;
}

}  // namespace

TEST(Nerve, SimplicialIdentities) {
  std::vector<GreenFunctor> rs{burnside(2), fixed_point_green(function_ring(GSet::orbit(2, 1))),
                               fixed_point_green(gaussian_integers_conjugation(2)), fp_norm(2, 2), fp_norm(3, 3)};
  for (const auto& r : rs) {
    CyclicNerve nv = twisted_cyclic_nerve(r, 3);
    AxiomReport rep = check_simplicial_identities(nv.simplicial);
    EXPECT_TRUE(rep.ok()) << rep.str();
    EXPECT_TRUE(check_boundary_squared(moore_complex(nv.simplicial)).ok());
  }
}

TEST(Nerve, TwistVisibleOnSwap) {
  CyclicNerve nv = twisted_cyclic_nerve(fixed_point_green(function_ring(GSet::orbit(2, 1))), 1);
  const FgAbGroup& bottom = nv.simplicial.objects[0].level(1);
  EXPECT_FALSE(equal_mod(bottom, nv.simplicial.face(1, 0).at(1), nv.simplicial.face(1, 1).at(1)));
}

TEST(Nerve, TrivialWeylFacesAgree) {
  for (const auto& r : {fp_norm(2, 4), burnside(3), NormFunctor(BaseRing::integers(), 2).green()}) {
    CyclicNerve nv = twisted_cyclic_nerve(r, 1);
    EXPECT_TRUE(equal(nv.simplicial.objects[0], nv.simplicial.face(1, 0), nv.simplicial.face(1, 1)));
  }
}

TEST(Nerve, TrivialGroupIntegers) {
  GreenFunctor z = fixed_point_green(trivial_ring(1, 0));
  CyclicNerve nv = twisted_cyclic_nerve(z, 3);
  MackeyComplex c = moore_complex(nv.simplicial);
  EXPECT_EQ(homology(c, 0).functor.level(1).str(), "Z");
  EXPECT_EQ(homology(c, 1).functor.level(1).str(), "0");
  EXPECT_EQ(homology(c, 2).functor.level(1).str(), "0");
  EXPECT_THROW(homology(c, 3), InvalidArgument);
}

TEST(Nerve, TwistedHHOfFp) {
  struct Case {
    long p, k;
  };
  for (Case cs : {Case{2, 1}, Case{2, 2}, Case{3, 1}}) {
    long n = ipow(cs.p, cs.k);
    GreenFunctor r = fp_norm(cs.p, n);
    CyclicNerve nv = twisted_cyclic_nerve(r, 4);
    MackeyComplex c = moore_complex(nv.simplicial);
    MackeyHomology h0 = homology(c, 0);
    for (long j = 0, d = 1; j <= cs.k; ++j, d *= cs.p) EXPECT_EQ(h0.functor.level(d).str(), "Z/" + std::to_string(d * cs.p));
    EXPECT_TRUE(same_invariants(h0.functor, r.mackey().canonicalized()));
    for (std::size_t k = 1; k <= 3; ++k)
      for (long d : mackey::divisors(n)) EXPECT_TRUE(homology(c, k).functor.level(d).is_trivial()) << k << " " << d;
  }
}

TEST(Nerve, HH0MatchesOracle) {
  for (long n = 1; n <= 6; ++n)
    for (const auto& r : commutative_samples(n)) {
      AxiomReport rep = compare_hh0_with_oracle(r);
      EXPECT_TRUE(rep.ok()) << "n=" << n << "\n" << r.mackey().str() << rep.str();
    }
}

TEST(Nerve, SwapRingHH0Vanishes) {
  GreenFunctor r = fixed_point_green(function_ring(GSet::orbit(2, 1)));
  MackeyHomology h0 = hh(r, 0);
  EXPECT_TRUE(h0.functor.level(1).is_trivial());
  EXPECT_TRUE(h0.functor.level(2).is_trivial());
  // the Gaussian integers keep Z/2 at the top and Z[i]/2i at the bottom
  GreenQuotient o = hh0_oracle(fixed_point_green(gaussian_integers_conjugation(2)));
  EXPECT_EQ(hh(fixed_point_green(gaussian_integers_conjugation(2)), 0).functor.level(1).order(), 4);
  EXPECT_EQ(o.result.mackey().level(1).order(), 4);
}

TEST(Nerve, HH0GreenStructure) {
  CyclicNerve nv = twisted_cyclic_nerve(fixed_point_green(gaussian_integers_conjugation(4)), 1);
  EXPECT_TRUE(check_axioms(hh0_green(nv)).ok());
}

TEST(Edgewise, IdentityForR1) {
  CyclicNerve nv = twisted_cyclic_nerve(fp_norm(2, 2), 3);
  SimplicialMackey sd = edgewise_subdivision(nv.simplicial, 1, 3);
  for (std::size_t j = 1; j <= 3; ++j)
    for (std::size_t i = 0; i <= j; ++i) EXPECT_TRUE(equal(sd.objects[j - 1], sd.face(j, i), nv.simplicial.face(j, i)));
  EXPECT_THROW(edgewise_subdivision(nv.simplicial, 2, 2), InvalidArgument);
}

TEST(Edgewise, SubdivisionIsSimplicial) {
  CyclicNerve nv = twisted_cyclic_nerve(fixed_point_green(gaussian_integers_conjugation(2)), 5);
  SimplicialMackey sd = edgewise_subdivision(nv.simplicial, 2, 2);
  EXPECT_TRUE(check_simplicial_identities(sd).ok()) << check_simplicial_identities(sd).str();
  CyclicNerve nv3 = twisted_cyclic_nerve(burnside(3), 5);
  EXPECT_TRUE(check_simplicial_identities(edgewise_subdivision(nv3.simplicial, 3, 1)).ok());
}
