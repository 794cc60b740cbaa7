#include "mackey/cycmonoid.hpp"
#include "mackey/norm.hpp"

#include <gtest/gtest.h>

using namespace mackey;

namespace {

std::vector<PointedGMonoid> monoids(long n) {
  std::vector<PointedGMonoid> out{unit_monoid(n), dual_number_monoid(n)};
  if (n % 2 == 0) out.push_back(swapped_idempotents(n));
  return out;
}

std::vector<GreenFunctor> rings(long n) {
  std::vector<GreenFunctor> out{burnside(n), NormFunctor(BaseRing::integers_mod(2), n).green().canonicalized()};
  if (n % 2 == 0) out.push_back(fixed_point_green(gaussian_integers_conjugation(n)));
  return out;
}

}  // namespace

TEST(Monoid, Validation) {
  for (long n : {1L, 2L, 4L})
    for (const auto& m : monoids(n)) EXPECT_TRUE(check_monoid(m).ok()) << check_monoid(m).str();
  PointedGMonoid bad = dual_number_monoid(1);
  bad.table[2][2] = 2;  // x^2 = x is fine, x * 1 = 0 is not
  bad.table[2][1] = 0;
  EXPECT_FALSE(check_monoid(bad).ok());
  PointedGMonoid moved = dual_number_monoid(2);
  moved.action = {0, 2, 1};
  EXPECT_FALSE(check_monoid(moved).ok());
  EXPECT_THROW(swapped_idempotents(3), InvalidArgument);
}

TEST(MonoidAlgebra, UnitMonoidGivesRing) {
  for (long n : {1L, 2L, 4L, 6L})
    for (const auto& r : rings(n)) {
      GreenFunctor a = monoid_algebra_direct(r, unit_monoid(n));
      EXPECT_TRUE(same_invariants(a.mackey().canonicalized(), r.mackey().canonicalized()));
      EXPECT_TRUE(compare_monoid_algebras(r, unit_monoid(n)).ok());
    }
}

TEST(MonoidAlgebra, DualNumbers) {
  GreenFunctor z = fixed_point_green(trivial_ring(1, 0));
  GreenFunctor a = monoid_algebra_direct(z, dual_number_monoid(1));
  EXPECT_EQ(a.mackey().level(1).str(), "Z^2");
  // x^2 = 0
  Vec x = unit_vec(2, 1);
  EXPECT_TRUE(a.mackey().level(1).is_zero(a.multiply(1, x, x)));
  GreenFunctor b = monoid_algebra_direct(burnside(2), dual_number_monoid(2));
  EXPECT_EQ(b.mackey().level(2).str(), "Z^4");
  EXPECT_EQ(b.mackey().level(1).str(), "Z^2");
}

TEST(MonoidAlgebra, DirectMatchesBox) {
  for (long n : {1L, 2L, 3L, 4L})
    for (const auto& r : rings(n))
      for (const auto& m : monoids(n)) {
        AxiomReport rep = compare_monoid_algebras(r, m);
        EXPECT_TRUE(rep.ok()) << n << " " << m.names.size() << rep.str();
        EXPECT_TRUE(check_axioms(monoid_algebra_direct(r, m)).ok());
      }
}

TEST(MonoidNerve, Shapes) {
  MonoidNerve pt = cyclic_nerve_monoid(unit_monoid(2), 3);
  for (const auto& s : pt.simplicial.sets) EXPECT_EQ(s.size(), 1u);
  MonoidNerve dn = cyclic_nerve_monoid(dual_number_monoid(1), 2);
  EXPECT_EQ(dn.simplicial.sets[1].size(), 4u);  // 1^1, 1^x, x^1, x^x and the basepoint
  EXPECT_EQ(dn.simplicial.sets[2].size(), 8u);
  for (const auto& m : {unit_monoid(2), dual_number_monoid(2), swapped_idempotents(2), swapped_idempotents(4)})
    EXPECT_TRUE(check_simplicial_identities(cyclic_nerve_monoid(m, 3).simplicial).ok());
}

TEST(MonoidNerve, LastFaceTwists) {
  PointedGMonoid m = swapped_idempotents(2);
  MonoidNerve nv = cyclic_nerve_monoid(m, 1);
  // nonzero elements 1, a, b sit at 0, 1, 2; the pair (t0, t1) at 3 t0 + t1
  auto at = [](long t0, long t1) { return static_cast<std::size_t>(3 * t0 + t1); };
  EXPECT_EQ(nv.simplicial.faces[1][1][at(1, 1)], -1);  // (g a) a = b a = 0
  EXPECT_EQ(nv.simplicial.faces[1][1][at(2, 1)], 2);   // (g a) b = b
  EXPECT_EQ(nv.simplicial.faces[1][0][at(2, 1)], -1);  // b a = 0
}

TEST(CellularChains, Basics) {
  SimplicialGSet free_orbit{{GSet::orbit(2, 1)}, {{}}, {{}}, {}};
  SimplicialMackey s = extend_simplicial(burnside(2).mackey(), free_orbit);
  EXPECT_TRUE(same_invariants(s.objects[0].canonicalized(), representable(GSet::orbit(2, 1)).canonicalized()));
  MackeyComplex pt = cellular_chains(cyclic_nerve_monoid(unit_monoid(2), 3).simplicial);
  EXPECT_TRUE(check_boundary_squared(pt).ok());
  EXPECT_TRUE(same_invariants(homology(pt, 0).functor, burnside(2).mackey().canonicalized()));
  for (std::size_t k = 1; k <= 2; ++k)
    for (long d : {1L, 2L}) EXPECT_TRUE(homology(pt, k).functor.level(d).is_trivial());
  MackeyComplex dn = cellular_chains(cyclic_nerve_monoid(dual_number_monoid(1), 2).simplicial);
  EXPECT_EQ(homology(dn, 0).functor.level(1).str(), "Z^2");
  for (const auto& m : {dual_number_monoid(2), swapped_idempotents(2), swapped_idempotents(4)})
    EXPECT_TRUE(check_boundary_squared(cellular_chains(cyclic_nerve_monoid(m, 3).simplicial)).ok());
}

TEST(Splitting, UnitMonoid) {
  SplittingReport s = splitting_check(burnside(2), unit_monoid(2), 1);
  EXPECT_TRUE(s.report.ok()) << s.report.str();
}

TEST(Splitting, DualNumbersOverIntegers) {
  SplittingReport s = splitting_check(fixed_point_green(trivial_ring(1, 0)), dual_number_monoid(1), 1);
  EXPECT_TRUE(s.report.ok()) << s.report.str();
  EXPECT_EQ(s.left[0].level(1).str(), "Z^2");
  // HH_1(Z[x]/x^2) is generated by dx and x dx with 2 x dx = 0
  EXPECT_TRUE(s.left[1].level(1).same_canonical_form(FgAbGroup::diagonal({2}, 1)));
}

TEST(Splitting, DegreeZero) {
  for (long n : {2L, 4L})
    for (const auto& r : rings(n))
      for (const auto& m : monoids(n)) {
        SplittingReport s = splitting_check(r, m, 0);
        EXPECT_TRUE(s.report.ok()) << n << " " << m.names.size() << s.report.str();
      }
}
