#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ternlab/chain.hpp"
#include "ternlab/diagram.hpp"
#include "ternlab/tern_table.hpp"

namespace ternlab {

/// A function X^arity -> Z_m, stored densely in row-major tuple order.
/// Arity 3 cochains pair with degree-1 chains (knot diagrams), arity 4
/// with degree-2 chains (surface diagrams).
class Cochain {
 public:
  Cochain(std::size_t order, std::size_t arity, std::uint64_t modulus);

  std::size_t order() const { return order_; }
  std::size_t arity() const { return arity_; }
  int degree() const { return static_cast<int>(arity_) - 2; }
  std::uint64_t modulus() const { return modulus_; }
  const std::vector<std::uint64_t>& values() const { return values_; }

  std::uint64_t operator()(std::span<const Element> tuple) const;
  std::uint64_t operator()(const TupleGen& t) const { return (*this)(t.coords()); }
  /// Stores value mod m (negative values wrap).
  void set(std::span<const Element> tuple, std::int64_t value);
  void set_index(std::size_t index, std::uint64_t value) { values_[index] = value % modulus_; }
  std::size_t index_of(std::span<const Element> tuple) const;
  TupleGen tuple_at(std::size_t index) const;
  bool is_zero() const;

  friend bool operator==(const Cochain&, const Cochain&) = default;

 private:
  std::size_t order_;
  std::size_t arity_;
  std::uint64_t modulus_;
  std::vector<std::uint64_t> values_;
};

/// sum of n_k [k] in Z[Z_m].
struct GroupRingElement {
  std::uint64_t modulus = 0;
  std::vector<std::uint64_t> multiplicity;  // indexed by k in Z_m

  std::uint64_t total() const;
  /// Multiplicative rendering, e.g. "9 + 18t^2".
  std::string to_string() const;
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;
};

struct CocycleCheck {
  enum class Condition { None, Degeneracy, Closure };
  bool passed = true;
  Condition failed = Condition::None;
  /// The degenerate tuple with f != 0, or the tuple x with f(boundary x) != 0.
  std::vector<Element> witness;
  std::uint64_t value = 0;
};

/// f vanishes on degenerate tuples and f(boundary x) = 0 for every x of
/// length arity + 1. For arity 3 these are f(a,b,a) = 0 and the six-term
/// identity in (a,b,c,d).
CocycleCheck check_cocycle(const TernTable& tbl, const Cochain& f);

/// (dg)(x) = g(boundary x); arity grows by one.
Cochain coboundary(const TernTable& tbl, const Cochain& g);

struct CocycleSpace {
  std::uint64_t modulus = 0;
  /// Generators of the normalized cocycles Z^1 over Z_m.
  std::vector<Cochain> cocycles;
  /// Generators of the coboundaries; coboundaries[i] == coboundary(sources[i]).
  std::vector<Cochain> coboundaries;
  std::vector<Cochain> sources;
};

/// Solves both cocycle conditions over Z_m for arity-3 cochains by the
/// Smith form of the transposed normalized boundary, which handles
/// composite m. Throws PreconditionError unless tbl is a tern.
CocycleSpace cocycle_space(const TernTable& tbl, std::uint64_t modulus);

/// True iff f is a Z_m-combination of the generators.
bool in_span(const std::vector<Cochain>& generators, const Cochain& f);

/// sum coeff * f(tuple) mod m.
std::uint64_t pair(const Cochain& f, const ChainVector& z);

/// Sum over colorings c of [pair(f, cycle(c))]. Throws PreconditionError if
/// f is not a cocycle.
GroupRingElement state_sum(const Diagram& d, const TernTable& tbl, const Cochain& f,
                           std::size_t threads = 1);

}  // namespace ternlab
