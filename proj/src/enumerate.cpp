// Backtracking search for terns of a given order.
//
// Cells of the table are assigned in lexicographic order. After every
// assignment each axiom instance is partially evaluated; when one side is
// known and the other is a single unset lookup with known arguments, that
// cell is forced. Conflicts backtrack. With require_quasigroup the Latin-cube
// constraint is also enforced on every assignment.

#include <algorithm>
#include <array>
#include <memory>
#include <optional>
#include <set>
#include <sstream>

#include "ternlab/errors.hpp"
#include "ternlab/tern_table.hpp"

namespace ternlab {
namespace {

constexpr Element kUnset = ~Element{0};

struct Expr {
  int var = -1;  // >= 0 for a variable, otherwise a T-node over args
  std::array<std::shared_ptr<const Expr>, 3> args;
};
using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr v(int i) {
  auto e = std::make_shared<Expr>();
  e->var = i;
  return e;
}

ExprPtr T(ExprPtr a, ExprPtr b, ExprPtr c) {
  auto e = std::make_shared<Expr>();
  e->args = {std::move(a), std::move(b), std::move(c)};
  return e;
}

struct AxiomExpr {
  int arity;
  ExprPtr lhs;
  ExprPtr rhs;
};

std::vector<AxiomExpr> axiom_expressions() {
  auto a = v(0), b = v(1), c = v(2), d = v(3);
  std::vector<AxiomExpr> out;
  out.push_back({2, T(a, b, a), b});
  out.push_back({3, T(a, b, T(b, a, c)), c});
  out.push_back({3, T(T(c, a, b), b, a), c});
  out.push_back({3, T(a, T(b, c, a), b), c});
  auto bcd = T(b, c, d);
  out.push_back({4, T(T(a, b, c), c, d), T(T(a, b, bcd), bcd, d)});
  auto abc = T(a, b, c);
  out.push_back({4, T(a, b, bcd), T(a, abc, T(abc, c, d))});
  return out;
}

struct Partial {
  std::optional<Element> value;
  std::optional<std::size_t> forcible_cell;  // set when the top lookup is the only gap
};

class Search {
 public:
  Search(std::size_t q, bool quasigroup)
      : q_(q), quasigroup_(quasigroup), cells_(q * q * q, kUnset), exprs_(axiom_expressions()) {}

  std::vector<TernTable> run() {
    // A1 seeds abaT = b.
    for (Element a = 0; a < q_; ++a)
      for (Element b = 0; b < q_; ++b)
        if (!assign(cell(a, b, a), b)) return {};
    if (propagate()) descend(0);
    std::vector<TernTable> out;
    for (const auto& entries : found_) out.emplace_back(q_, entries);
    return out;
  }

 private:
  std::size_t cell(Element a, Element b, Element c) const { return (a * q_ + b) * q_ + c; }

  Partial eval(const ExprPtr& e, std::span<const Element> vars) const {
    if (e->var >= 0) return {vars[e->var], std::nullopt};
    std::array<Element, 3> args{};
    for (int i = 0; i < 3; ++i) {
      Partial p = eval(e->args[i], vars);
      if (!p.value) return {};
      args[i] = *p.value;
    }
    const std::size_t idx = cell(args[0], args[1], args[2]);
    if (cells_[idx] == kUnset) return {std::nullopt, idx};
    return {cells_[idx], std::nullopt};
  }

  bool latin_ok(std::size_t idx, Element value) const {
    const Element a = idx / (q_ * q_), b = (idx / q_) % q_, c = idx % q_;
    for (Element u = 0; u < q_; ++u) {
      if (u != a && cells_[cell(u, b, c)] == value) return false;
      if (u != b && cells_[cell(a, u, c)] == value) return false;
      if (u != c && cells_[cell(a, b, u)] == value) return false;
    }
    return true;
  }

  bool assign(std::size_t idx, Element value) {
    if (cells_[idx] != kUnset) return cells_[idx] == value;
    if (quasigroup_ && !latin_ok(idx, value)) return false;
    cells_[idx] = value;
    trail_.push_back(idx);
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      cells_[trail_.back()] = kUnset;
      trail_.pop_back();
    }
  }

  // Unit propagation to a fixpoint; false on conflict.
  bool propagate() {
    std::vector<Element> vars(4);
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& ax : exprs_) {
        std::fill(vars.begin(), vars.end(), 0);
        do {
          Partial l = eval(ax.lhs, vars);
          Partial r = eval(ax.rhs, vars);
          if (l.value && r.value) {
            if (*l.value != *r.value) return false;
          } else if (l.value && r.forcible_cell) {
            if (!assign(*r.forcible_cell, *l.value)) return false;
            changed = true;
          } else if (r.value && l.forcible_cell) {
            if (!assign(*l.forcible_cell, *r.value)) return false;
            changed = true;
          }
        } while (advance(vars, ax.arity));
      }
    }
    return true;
  }

  bool advance(std::vector<Element>& vars, int arity) const {
    for (int i = arity; i-- > 0;) {
      if (++vars[i] < q_) return true;
      vars[i] = 0;
    }
    return false;
  }

  void descend(std::size_t from) {
    std::size_t idx = from;
    while (idx < cells_.size() && cells_[idx] != kUnset) ++idx;
    if (idx == cells_.size()) {
      accept();
      return;
    }
    for (Element value = 0; value < q_; ++value) {
      const std::size_t mark = trail_.size();
      if (assign(idx, value) && propagate()) descend(idx + 1);
      undo_to(mark);
    }
  }

  void accept() {
    TernTable tbl(q_, cells_);
    if (!check_axioms(tbl).all_passed()) return;
    if (quasigroup_ && !is_ternary_quasigroup(tbl).passed) return;
    found_.insert(canonical_entries(tbl));
  }

  std::size_t q_;
  bool quasigroup_;
  std::vector<Element> cells_;
  std::vector<std::size_t> trail_;
  std::vector<AxiomExpr> exprs_;
  std::set<std::vector<Element>> found_;
};

}  // namespace

std::vector<TernTable> enumerate_terns(std::size_t q, bool require_quasigroup, std::size_t bound) {
  if (q == 0) throw InputError("tern order must be positive");
  if (q > bound) {
    std::ostringstream msg;
    msg << "enumeration of order " << q << " exceeds the configured bound " << bound;
    throw ResourceError(msg.str());
  }
  return Search(q, require_quasigroup).run();
}

}  // namespace ternlab
