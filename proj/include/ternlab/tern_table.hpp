#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ternlab {

/// Elements of a finite carrier are always the indices 0..q-1.
using Element = std::uint32_t;

/**
 * A finite ternary algebra (X, T) with X = {0, ..., q-1}.
 *
 * The table is total: every one of the q^3 triples has a value. Nothing is
 * assumed about axioms; use check_axioms() to find out what holds.
 * Entries are stored row-major, index a*q*q + b*q + c.
 */
class TernTable {
 public:
  TernTable(std::size_t order, std::vector<Element> entries);

  template <typename F>
  static TernTable from_function(std::size_t order, F&& op) {
    std::vector<Element> entries;
    entries.reserve(order * order * order);
    for (Element a = 0; a < order; ++a)
      for (Element b = 0; b < order; ++b)
        for (Element c = 0; c < order; ++c) entries.push_back(static_cast<Element>(op(a, b, c)));
    return TernTable(order, std::move(entries));
  }

  std::size_t order() const { return order_; }

  /// Unchecked lookup of abcT.
  Element operator()(Element a, Element b, Element c) const {
    return entries_[(static_cast<std::size_t>(a) * order_ + b) * order_ + c];
  }

  /// Checked lookup of abcT; throws InputError when an argument is >= q.
  Element apply(Element a, Element b, Element c) const;

  std::span<const Element> entries() const { return entries_; }

  friend bool operator==(const TernTable&, const TernTable&) = default;

 private:
  std::size_t order_;
  std::vector<Element> entries_;
};

/// A finite group on {0..g-1}, validated on construction.
class GroupTable {
 public:
  GroupTable(std::size_t order, std::vector<Element> product);

  static GroupTable cyclic(std::size_t n);
  /// Symmetric group on k points; elements are permutations in
  /// lexicographic order and (s*t)(i) = s(t(i)).
  static GroupTable symmetric(std::size_t k);

  std::size_t order() const { return order_; }
  Element multiply(Element x, Element y) const { return product_[x * order_ + y]; }
  Element inverse(Element x) const { return inverse_[x]; }
  Element identity() const { return identity_; }
  std::span<const Element> product() const { return product_; }

 private:
  std::size_t order_;
  std::vector<Element> product_;
  std::vector<Element> inverse_;
  Element identity_ = 0;
};

enum class Axiom { A1, A2L, A2M, A2R, A3L, A3R, Quasigroup };

/// The six axioms whose conjunction defines a tern.
inline constexpr Axiom kTernAxioms[] = {Axiom::A1,  Axiom::A2L, Axiom::A2M,
                                        Axiom::A2R, Axiom::A3L, Axiom::A3R};

std::string_view axiom_name(Axiom axiom);
/// Accepts the names printed by axiom_name(); throws InputError otherwise.
Axiom parse_axiom(std::string_view name);

struct AxiomStatus {
  Axiom axiom;
  bool passed = true;
  /// Quantified tuple of the lexicographically first counterexample. For
  /// A1 this is (a,b), for A2* (a,b,c), for A3* (a,b,c,d). For the
  /// quasigroup check it is (slot, p, r, u, v): in argument slot `slot`
  /// with the other two arguments p, r (in order) the inputs u < v collide.
  std::vector<Element> witness;
};

struct AxiomReport {
  std::vector<AxiomStatus> statuses;

  bool all_passed() const;
  const AxiomStatus* find(Axiom axiom) const;
  bool passed(Axiom axiom) const;
};

/// Both sides of an axiom's equation at a quantified tuple.
std::pair<Element, Element> axiom_sides(const TernTable& tbl, Axiom axiom,
                                        std::span<const Element> args);
/// Number of quantified variables (2, 3, 4; 5 for Quasigroup witnesses).
std::size_t axiom_arity(Axiom axiom);
/// True when `witness` really exhibits a failure of `axiom` on `tbl`.
bool witness_refutes(const TernTable& tbl, Axiom axiom, std::span<const Element> witness);

AxiomStatus check_axiom(const TernTable& tbl, Axiom axiom);
AxiomReport check_axioms(const TernTable& tbl, std::span<const Axiom> axioms);
AxiomReport check_axioms(const TernTable& tbl);

/// Latin-cube test: every section in each argument slot is a bijection.
AxiomStatus is_ternary_quasigroup(const TernTable& tbl);

/// xyz(hat T) = zyxT.
TernTable hat(const TernTable& tbl);

/// R_n: pqrT = p + q - r (mod n).
TernTable make_affine(std::size_t n);

enum class GroupTernVariant {
  XZinvY,  ///< x * z^-1 * y
  AinvBC,  ///< a^-1 * b * c
  ABCinv,  ///< a * b * c^-1
  ABinvC,  ///< a * b^-1 * c
};

std::string_view variant_name(GroupTernVariant variant);
GroupTernVariant parse_group_variant(std::string_view name);

TernTable make_group_tern(const GroupTable& group, GroupTernVariant variant);

/// Relabel by a permutation p of X: (p.T)(p a, p b, p c) = p(abcT).
TernTable relabel(const TernTable& tbl, std::span<const Element> perm);

/// Lexicographically smallest entry vector over all relabelings.
std::vector<Element> canonical_entries(const TernTable& tbl);
bool isomorphic(const TernTable& lhs, const TernTable& rhs);

inline constexpr std::size_t kDefaultEnumerationBound = 4;

/**
 * All terns of order q up to isomorphism (one relabeling permutation applied
 * to every argument and to the value simultaneously). Each result is the
 * canonical representative of its class, results sorted by entries.
 *
 * Throws ResourceError when q exceeds `bound`.
 */
std::vector<TernTable> enumerate_terns(std::size_t q, bool require_quasigroup,
                                       std::size_t bound = kDefaultEnumerationBound);

}  // namespace ternlab
