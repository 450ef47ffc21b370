#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "ternlab/tern_table.hpp"

namespace ternlab {

/// A generator (x_0, ..., x_{n+1}) of C_n(X). Degree -1 is the 1-tuple.
class TupleGen {
 public:
  TupleGen() = default;
  explicit TupleGen(std::vector<Element> coords);
  TupleGen(std::initializer_list<Element> coords) : TupleGen(std::vector<Element>(coords)) {}

  int degree() const { return static_cast<int>(coords_.size()) - 2; }
  std::size_t size() const { return coords_.size(); }
  Element operator[](std::size_t k) const { return coords_[k]; }
  std::span<const Element> coords() const { return coords_; }

  /// Throws InputError unless every coordinate is < q.
  void require_order(std::size_t q) const;

  auto operator<=>(const TupleGen&) const = default;
  bool operator==(const TupleGen&) const = default;

 private:
  std::vector<Element> coords_;
};

std::ostream& operator<<(std::ostream& os, const TupleGen& t);
std::string to_string(const TupleGen& t);

/// Integer combination of generators of one degree. Zero coefficients are
/// never stored and terms are kept in lexicographic order, so equality is
/// structural.
class ChainVector {
 public:
  using Coefficient = std::int64_t;
  using Terms = std::map<TupleGen, Coefficient>;

  explicit ChainVector(int degree) : degree_(degree) {}
  ChainVector(const TupleGen& gen, Coefficient coeff = 1);

  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coefficient coefficient(const TupleGen& gen) const;

  void add(const TupleGen& gen, Coefficient coeff);
  ChainVector& operator+=(const ChainVector& other);
  ChainVector& operator-=(const ChainVector& other);
  ChainVector operator-() const;
  friend ChainVector operator+(ChainVector lhs, const ChainVector& rhs) { return lhs += rhs; }
  friend ChainVector operator-(ChainVector lhs, const ChainVector& rhs) { return lhs -= rhs; }
  friend ChainVector operator*(ChainVector::Coefficient k, const ChainVector& c);

  bool operator==(const ChainVector&) const = default;

 private:
  int degree_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const ChainVector& c);

enum class FaceSide { L, R };
enum class Differential { L, R, Full };

std::string_view differential_name(Differential d);
Differential parse_differential(std::string_view name);

/// x[k]: replace x_k by x_{k-1} x_k x_{k+1} T, for 1 <= k <= n.
TupleGen substitute(const TupleGen& t, std::size_t k, const TernTable& tbl);

/// d_i^{n,L}, computed right to left:
///   y_k = x_{k-1} x_k y_{k+1} T for k <= i, y_k = x_k for k > i (k = 1..n+1).
TupleGen face_L(const TernTable& tbl, std::size_t i, const TupleGen& t);

/// d_i^{n,R}, computed left to right:
///   y_k = y_{k-1} x_k x_{k+1} T for k > i, y_k = x_k for k <= i (k = 0..n).
TupleGen face_R(const TernTable& tbl, std::size_t i, const TupleGen& t);

TupleGen face(const TernTable& tbl, FaceSide side, std::size_t i, const TupleGen& t);

/// Combined face d_i = d_i^L - d_i^R, as a chain.
ChainVector face_combined(const TernTable& tbl, std::size_t i, const TupleGen& t);

/// Linear extension of one face map to a chain.
ChainVector apply_face(const TernTable& tbl, FaceSide side, std::size_t i, const ChainVector& c);
ChainVector apply_face_combined(const TernTable& tbl, std::size_t i, const ChainVector& c);

TupleGen reverse(const TupleGen& t);
ChainVector reverse(const ChainVector& c);

/// Boundary of a single generator of degree n >= 0.
ChainVector boundary(const TernTable& tbl, Differential variant, const TupleGen& t);
/// Boundary of a chain of degree n >= 0.
ChainVector boundary(const TernTable& tbl, Differential variant, const ChainVector& c);

/// True iff x_i = x_{i+2} for some i.
bool is_degenerate(const TupleGen& t);

/// Drops degenerate terms (the image in C_n / C_n^D).
ChainVector project_nondegenerate(const ChainVector& c);
/// Keeps only degenerate terms.
ChainVector project_degenerate(const ChainVector& c);

}  // namespace ternlab
