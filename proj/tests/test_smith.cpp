#include <gtest/gtest.h>

#include <random>

#include "oracles/integer_linear.hpp"
#include "seed.hpp"
#include "ternlab/smith.hpp"

using namespace ternlab;

namespace {

DenseMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range,
                          double density) {
  std::uniform_int_distribution<int> value(-range, range);
  std::bernoulli_distribution keep(density);
  DenseMatrix m(rows, std::vector<Integer>(cols, 0));
  for (auto& row : m)
    for (auto& v : row)
      if (keep(rng)) v = value(rng);
  return m;
}

DenseMatrix diagonal(const SmithForm& s) {
  DenseMatrix d(s.rows(), std::vector<Integer>(s.cols(), 0));
  for (std::size_t i = 0; i < s.rank(); ++i) d[i][i] = s.divisors()[i];
  return d;
}

}  // namespace

TEST(Smith, SmallCases) {
  EXPECT_EQ(SmithForm::compute(SparseMatrix::from_dense({{2, 0}, {0, 3}})).divisors(),
            (std::vector<Integer>{1, 6}));
  EXPECT_TRUE(SmithForm::compute(SparseMatrix(3, 4)).divisors().empty());
  EXPECT_EQ(SmithForm::compute(SparseMatrix::from_dense({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})).divisors(),
            (std::vector<Integer>{2, 6, 12}));
  EXPECT_EQ(SmithForm::compute(SparseMatrix(0, 0)).rank(), 0u);
}

TEST(Smith, AgreesWithDeterminantalDivisors) {
  std::mt19937_64 rng(testing_support::seed());
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    const DenseMatrix m = random_matrix(rng, r, c, 9, 0.6);
    const SmithForm s = SmithForm::compute(SparseMatrix::from_dense(m));
    ASSERT_EQ(s.divisors(), oracle::elementary_divisors(m)) << "trial " << trial;
  }
}

TEST(Smith, TransformsRecompose) {
  std::mt19937_64 rng(testing_support::seed() + 7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
    const DenseMatrix m = random_matrix(rng, r, c, 20, 0.4);
    const SmithForm s = SmithForm::compute(SparseMatrix::from_dense(m), true);
    const DenseMatrix u = s.row_transform(), v = s.col_transform();
    ASSERT_EQ(multiply(multiply(u, m), v), diagonal(s)) << "trial " << trial;
    ASSERT_EQ(abs(oracle::bareiss_det(u)), 1);
    ASSERT_EQ(abs(oracle::bareiss_det(v)), 1);
    for (std::size_t i = 1; i < s.rank(); ++i) ASSERT_EQ(s.divisors()[i] % s.divisors()[i - 1], 0);
    ASSERT_EQ(s.rank(), oracle::rank(m));
  }
}

TEST(Smith, VectorTransformsMatchMatrices) {
  std::mt19937_64 rng(testing_support::seed() + 3);
  const DenseMatrix m = random_matrix(rng, 7, 9, 5, 0.5);
  const SmithForm s = SmithForm::compute(SparseMatrix::from_dense(m), true);
  const DenseMatrix u = s.row_transform(), v = s.col_transform();
  std::vector<Integer> z(7), y(9);
  for (auto& e : z) e = static_cast<long>(rng() % 11) - 5;
  for (auto& e : y) e = static_cast<long>(rng() % 11) - 5;
  const auto uz = s.apply_row_transform(z), vy = s.apply_col_transform(y);
  for (std::size_t i = 0; i < 7; ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < 7; ++j) acc += u[i][j] * z[j];
    EXPECT_EQ(uz[i], acc);
  }
  for (std::size_t i = 0; i < 9; ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < 9; ++j) acc += v[i][j] * y[j];
    EXPECT_EQ(vy[i], acc);
  }
}

TEST(Smith, LargeEntriesStayExact) {
  // 2^70 * 3 and 2^70 * 5: gcd 2^70, lcm 2^70 * 15.
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, 70);
  const SmithForm s = SmithForm::compute(SparseMatrix::from_dense({{p * 3, 0}, {0, p * 5}}), true);
  EXPECT_EQ(s.divisors(), (std::vector<Integer>{p, p * 15}));
  EXPECT_EQ(s.torsion(), (std::vector<Integer>{p, p * 15}));
}

TEST(Sparse, Basics) {
  SparseMatrix m(2, 3);
  m.add(0, 1, 4);
  m.add(0, 1, -4);
  EXPECT_EQ(m.nonzeros(), 0u);
  m.add(1, 2, 7);
  EXPECT_EQ(m.at(1, 2), 7);
  EXPECT_EQ(m.transposed().at(2, 1), 7);
  EXPECT_EQ(SparseMatrix::from_dense(m.to_dense()).to_dense(), m.to_dense());
}
