#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ternlab/chain.hpp"
#include "ternlab/smith.hpp"
#include "ternlab/tern_table.hpp"

namespace ternlab {

enum class Subcomplex { Full, Degenerate, Normalized };

std::string_view subcomplex_name(Subcomplex s);
Subcomplex parse_subcomplex(std::string_view name);

/// Which differential and which piece of the complex: C, C^D or C/C^D.
struct ComplexSelector {
  Differential variant = Differential::Full;
  Subcomplex subcomplex = Subcomplex::Full;
};

/// Tern homology H^T: combined differential on the normalized quotient.
inline constexpr ComplexSelector kTernHomology{Differential::Full, Subcomplex::Normalized};

/// Axioms under which the degenerate part is a subcomplex for `variant`:
/// A1+A2L for L, A1+A2R for R, A1+A2L+A2R for the combined differential.
std::vector<Axiom> closure_axioms(Differential variant);

/// Throws PreconditionError naming the first missing axiom when the
/// degenerate/normalized selection is not a chain complex for `tbl`.
void require_admissible(const TernTable& tbl, const ComplexSelector& sel);

struct EngineConfig {
  /// Refuse bases with more generators than this.
  std::size_t max_generators = 1'000'000;
  std::size_t threads = 1;

  /// Defaults, with TERNLAB_MAX_GENERATORS and TERNLAB_THREADS applied when set.
  static EngineConfig from_env();
};

/// An ordered generator basis with O(1) lookup by tuple.
class Basis {
 public:
  Basis(std::size_t q, int degree, Subcomplex sub, const EngineConfig& config = {});

  std::size_t order() const { return q_; }
  int degree() const { return degree_; }
  std::size_t size() const { return gens_.size(); }
  const std::vector<TupleGen>& generators() const { return gens_; }
  const TupleGen& operator[](std::size_t i) const { return gens_[i]; }
  std::optional<std::size_t> index_of(const TupleGen& t) const;

 private:
  std::size_t q_;
  int degree_;
  std::vector<TupleGen> gens_;
  std::vector<std::int64_t> position_;  // indexed by base-q code
};

/// Lexicographically ordered generators of C_n, C_n^D or the non-degenerate
/// generators representing C_n / C_n^D.
std::vector<TupleGen> basis(std::size_t q, int n, Subcomplex sub, const EngineConfig& config = {});

/// Matrix of the differential from degree n to degree n-1 in the selected
/// complex. Column j is the boundary of cols[j]; for the normalized quotient
/// terms on degenerate generators are dropped.
struct BoundaryMatrix {
  int degree;
  ComplexSelector selector;
  Basis rows;
  Basis cols;
  SparseMatrix matrix;
};

BoundaryMatrix build_matrix(const TernTable& tbl, int n, const ComplexSelector& sel,
                            const EngineConfig& config = {});

/// Z^rank + Z_{t_1} + ... with t_1 | t_2 | ..., each t_i >= 2.
struct HomologyGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  bool is_zero() const { return rank == 0 && torsion.empty(); }
  std::string to_string() const;
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

HomologyGroup homology(const TernTable& tbl, int n, const ComplexSelector& sel,
                       const EngineConfig& config = {});

/// H_n for n = -1 .. max_degree, sharing the Smith forms between degrees.
std::vector<HomologyGroup> homology_range(const TernTable& tbl, int max_degree,
                                          const ComplexSelector& sel,
                                          const EngineConfig& config = {});

struct CycleClass {
  enum class Kind { NotACycle, Finite, Infinite };
  Kind kind = Kind::Finite;
  /// The nonzero boundary (in the selected complex) when kind == NotACycle.
  std::optional<ChainVector> boundary;
  /// Least k >= 1 with k*z a boundary, when kind == Finite.
  Integer order = 1;
};

/// Checks that z is a cycle in the selected complex and finds the order of
/// its homology class. For the normalized quotient, degenerate terms of z
/// are discarded first.
CycleClass cycle_class(const TernTable& tbl, const ComplexSelector& sel, const ChainVector& z,
                       const EngineConfig& config = {});

}  // namespace ternlab
