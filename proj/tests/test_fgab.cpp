#include "mackey/fgab.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace mackey;

namespace {

bool unimodular(const Matrix& u) {
  if (u.rows() != u.cols()) return false;
  SmithForm f = snf(u);
  for (std::size_t i = 0; i < u.rows(); ++i)
    if (f.D(i, i) != 1) return false;
  return true;
}

bool is_smith(const Matrix& d) {
  Int prev = 1;
  bool seen_zero = false;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (i != j && d(i, j) != 0) return false;
      if (i == j) {
        if (d(i, i) < 0) return false;
        if (d(i, i) == 0) {
          seen_zero = true;
        } else {
          if (seen_zero || !divides(prev, d(i, i))) return false;
          prev = d(i, i);
        }
      }
    }
  return true;
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

AbHom scalar(const FgAbGroup& a, const FgAbGroup& b, long k) {
  Matrix m(1, 1);
  m(0, 0) = k;
  return AbHom(a, b, m);
}

}  // namespace

TEST(Snf, RowVector) {
  SmithForm f = snf(Matrix::of({{4, 6}}));
  EXPECT_EQ(f.D, Matrix::of({{2, 0}}));
  EXPECT_EQ(f.U * Matrix::of({{4, 6}}) * f.V, f.D);
}

TEST(Snf, TrivialCases) {
  EXPECT_EQ(snf(Matrix::identity(2)).D, Matrix::identity(2));
  EXPECT_EQ(snf(Matrix::of({{0}})).D, Matrix::of({{0}}));
  EXPECT_EQ(snf(Matrix(0, 3)).D, Matrix(0, 3));
}

TEST(Snf, RandomRoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(1, 8);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix m = random_matrix(rng, dim(rng), dim(rng), 20);
    SmithForm f = snf(m);
    ASSERT_EQ(f.U * m * f.V, f.D) << m;
    ASSERT_TRUE(is_smith(f.D)) << f.D;
    ASSERT_TRUE(unimodular(f.U));
    ASSERT_TRUE(unimodular(f.V));
  }
}

TEST(Snf, KernelAndSolve) {
  Matrix a = Matrix::of({{2, 4, 6}, {1, 1, 1}});
  Matrix k = kernel_basis(a);
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_TRUE((a * k).is_zero());
  auto x = solve(a, Vec{Int(2), Int(1)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(a * *x, (Vec{Int(2), Int(1)}));
  EXPECT_FALSE(solve(Matrix::of({{2}}), Vec{Int(1)}).has_value());
}

TEST(Lattice, MembershipAndCoordinates) {
  Lattice lat(2);
  lat.insert(Vec{Int(4), Int(6)});
  lat.insert(Vec{Int(6), Int(9)});
  EXPECT_TRUE(lat.contains(Vec{Int(2), Int(3)}));
  EXPECT_FALSE(lat.contains(Vec{Int(1), Int(0)}));
  EXPECT_EQ(lat.rank(), 1u);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    Matrix m = random_matrix(rng, 4, 5, 9);
    Lattice l(5);
    l.insert_rows(m);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      auto c = l.coordinates(m.row(i));
      ASSERT_TRUE(c.has_value());
      Vec back = l.basis_matrix().transpose() * *c;
      EXPECT_EQ(back, m.row(i));
    }
  }
}

TEST(Group, CanonicalForm) {
  FgAbGroup g(2, Matrix::of({{2, 0}, {0, 3}}));
  EXPECT_EQ(g.invariant_factors(), (std::vector<Int>{6}));
  EXPECT_EQ(g.free_rank(), 0u);
  EXPECT_EQ(g.str(), "Z/6");
  FgAbGroup h(3, Matrix::of({{2, 4, 0}}));
  EXPECT_EQ(h.str(), "Z/2 + Z^2");
  EXPECT_TRUE(FgAbGroup().is_trivial());
  EXPECT_TRUE(FgAbGroup::diagonal({Int(2), Int(4)}, 1).is_canonical());
  EXPECT_FALSE(g.is_canonical());
  EXPECT_TRUE(g.is_zero(Vec{Int(2), Int(3)}));
  EXPECT_FALSE(g.is_zero(Vec{Int(1), Int(0)}));
  EXPECT_EQ(g.element_order(Vec{Int(1), Int(1)}), 6);
}

TEST(Group, Tensor) {
  EXPECT_TRUE(tensor(FgAbGroup::cyclic(2), FgAbGroup::cyclic(3)).is_trivial());
  EXPECT_EQ(tensor(FgAbGroup::cyclic(4), FgAbGroup::cyclic(6)).str(), "Z/2");
  FgAbGroup a(3, Matrix::of({{2, 2, 0}, {0, 0, 5}}));
  EXPECT_TRUE(isomorphic(tensor(FgAbGroup::free(1), a), a));
  FgAbGroup b = FgAbGroup::diagonal({Int(6)}, 1);
  EXPECT_TRUE(isomorphic(tensor(a, b), tensor(b, a)));
  FgAbGroup c = FgAbGroup::cyclic(4);
  EXPECT_TRUE(isomorphic(tensor(tensor(a, b), c), tensor(a, tensor(b, c))));
}

TEST(Group, Homology) {
  FgAbGroup z = FgAbGroup::free(1);
  FgAbGroup zero;
  EXPECT_EQ(homology(scalar(z, z, 2), AbHom::zero(z, zero)).str(), "Z/2");
  EXPECT_TRUE(homology(scalar(z, z, 1), AbHom::zero(z, zero)).is_trivial());
  FgAbGroup z2 = FgAbGroup::free(2);
  EXPECT_EQ(homology(AbHom::zero(z2, z2), AbHom::zero(z2, z2)).str(), "Z^2");
  EXPECT_THROW(homology(scalar(z, z, 1), scalar(z, z, 1)), InvalidArgument);
}

TEST(Group, HomologyExactRandom) {
  // d_in surjective, d_out injective => homology 0
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    Matrix m = random_matrix(rng, 3, 3, 4);
    if (snf(m).D(2, 2) == 0) continue;
    FgAbGroup a = FgAbGroup::free(3);
    FgAbGroup b = FgAbGroup(3, m.transpose());  // coker of m
    AbHom surj(a, b, Matrix::identity(3));
    AbHom inj(b, FgAbGroup(), Matrix(0, 3));
    EXPECT_TRUE(homology(AbHom(b, b, Matrix::identity(3)), inj).is_trivial());
    EXPECT_TRUE(homology(surj, AbHom::zero(b, FgAbGroup())).is_trivial());
  }
}

TEST(Group, KernelCokernelSum) {
  FgAbGroup z = FgAbGroup::free(1);
  FgAbGroup z6 = FgAbGroup::cyclic(6);
  AbHom f(z, z6, Matrix::of({{2}}));
  EXPECT_EQ(cokernel(f).canonical_group().str(), "Z/2");
  EXPECT_EQ(kernel(f).group.str(), "Z");
  EXPECT_EQ(kernel(AbHom(z6, z6, Matrix::of({{2}}))).group.str(), "Z/2");
  EXPECT_EQ(direct_sum(z6, FgAbGroup::cyclic(4)).str(), "Z/2 + Z/12");
  AbHom g(z6, z6, Matrix::of({{7}}));
  EXPECT_TRUE(g.well_defined());
  EXPECT_TRUE(equal(g, AbHom(z6, z6, Matrix::of({{1}}))));
  EXPECT_FALSE(AbHom(z6, z, Matrix::of({{1}})).well_defined());
}
