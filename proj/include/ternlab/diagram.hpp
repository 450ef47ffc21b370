#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ternlab/chain.hpp"
#include "ternlab/tern_table.hpp"

namespace ternlab {

/// Four regions around a crossing or double-point stratum, related by
/// w = xyzT. In the local cyclic order w, x, y, z the over-arc (over-sheet)
/// separates w from x and y from z; the under-arc separates x from y and z
/// from w. Positions may repeat a region.
struct Quad {
  std::size_t x = 0, y = 0, z = 0, w = 0;
};

struct Crossing {
  int sign = 1;
  Quad quad;
  /// Source, middle and target regions: r1|r2 across the under-arc, r2|r3
  /// across the over-arc.
  std::array<std::size_t, 3> ascending{};
};

struct Stratum {
  Quad quad;
};

struct TriplePoint {
  int sign = 1;
  /// R0|R1 across the bottom sheet, R1|R2 the middle, R2|R3 the top.
  std::array<std::size_t, 4> ascending{};
};

/// Combinatorial code of a knot diagram (dimension 1) or of a knotted
/// surface diagram (dimension 2). Regions are referred to by index into
/// region_names; the file format uses the names.
struct Diagram {
  int dimension = 1;
  std::vector<std::string> region_names;
  std::vector<Crossing> crossings;
  std::vector<Stratum> strata;
  std::vector<TriplePoint> triple_points;

  std::size_t region_count() const { return region_names.size(); }
  /// Crossing quads for dimension 1, stratum quads for dimension 2.
  std::vector<Quad> relations() const;
  std::optional<std::size_t> region_index(std::string_view name) const;
};

/// Structural checks: dimension, ids in range, signs, ascending paths.
/// Throws InputError on the first problem.
void validate_diagram(const Diagram& d);

/// Parses and validates the JSON diagram format.
Diagram parse_diagram(std::string_view text);

/// Region index -> color.
using Coloring = std::vector<Element>;

bool is_coloring(const Diagram& d, const TernTable& tbl, const Coloring& c);

/**
 * All colorings, in lexicographic order of the region colors.
 *
 * Regions are assigned in file order. When three regions of a relation are
 * colored the fourth is forced: w directly, and x, y or z through the
 * inverse sections when the table is a ternary quasigroup. For other tables
 * only fully colored relations are checked, which is slower but exact.
 */
std::vector<Coloring> enumerate_colorings(const Diagram& d, const TernTable& tbl,
                                          std::size_t threads = 1);

/// Sum over crossings (triple points) of sign times the colored ascending
/// path: a degree-1 chain for knots, degree 2 for surfaces.
ChainVector extract_cycle(const Diagram& d, const TernTable& tbl, const Coloring& c);

struct CycleCheck {
  bool passed = true;
  /// Non-degenerate part of the boundary when the check fails.
  ChainVector boundary{0};
};

/// Passes iff the combined boundary of z vanishes modulo degenerate tuples.
CycleCheck verify_cycle(const Diagram& d, const TernTable& tbl, const ChainVector& z);

}  // namespace ternlab
