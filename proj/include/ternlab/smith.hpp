#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <vector>

namespace ternlab {

using Integer = mpz_class;
using DenseMatrix = std::vector<std::vector<Integer>>;

/// Column-major sparse integer matrix.
class SparseMatrix {
 public:
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }

  /// Adds v to entry (r, c); entries that cancel to zero are erased.
  void add(std::size_t r, std::size_t c, const Integer& v);
  Integer at(std::size_t r, std::size_t c) const;
  const std::map<std::size_t, Integer>& column(std::size_t c) const { return columns_[c]; }
  std::size_t nonzeros() const;

  SparseMatrix transposed() const;
  DenseMatrix to_dense() const;
  static SparseMatrix from_dense(const DenseMatrix& m);

 private:
  std::size_t rows_;
  std::vector<std::map<std::size_t, Integer>> columns_;
};

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix identity_matrix(std::size_t n);

/**
 * Smith normal form U * M * V = D over the integers.
 *
 * Pivots are chosen by minimal absolute value (ties broken by fill-in
 * estimate) and reduced with Euclidean row/column steps until the pivot row
 * and column are clear. The resulting diagonal is then normalized to a
 * divisibility chain with 2x2 gcd/lcm transforms. All arithmetic is GMP.
 *
 * When transforms are requested the elementary row and column operations are
 * logged; U and V can then be applied to vectors or materialized densely.
 */
class SmithForm {
 public:
  static SmithForm compute(const SparseMatrix& m, bool with_transforms = false);

  /// Elementary divisors d_1 | d_2 | ... | d_r, all positive.
  const std::vector<Integer>& divisors() const { return divisors_; }
  std::size_t rank() const { return divisors_.size(); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool has_transforms() const { return with_transforms_; }

  /// U * z for a vector of length rows().
  std::vector<Integer> apply_row_transform(std::vector<Integer> z) const;
  /// V * y for a vector of length cols().
  std::vector<Integer> apply_col_transform(std::vector<Integer> y) const;
  DenseMatrix row_transform() const;
  DenseMatrix col_transform() const;

  /// Divisors greater than one.
  std::vector<Integer> torsion() const;

 private:
  // (v_i, v_j) <- (a v_i + b v_j, c v_i + d v_j); i == j means v_i <- a v_i.
  struct Op {
    std::size_t i, j;
    Integer a, b, c, d;
  };
  friend class SmithEliminator;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  bool with_transforms_ = false;
  std::vector<Integer> divisors_;
  std::vector<Op> row_ops_;
  std::vector<Op> col_ops_;
};

}  // namespace ternlab
