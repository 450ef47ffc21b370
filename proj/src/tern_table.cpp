#include "ternlab/tern_table.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "ternlab/errors.hpp"

namespace ternlab {

TernTable::TernTable(std::size_t order, std::vector<Element> entries)
    : order_(order), entries_(std::move(entries)) {
  if (order_ == 0) throw InputError("tern table order must be positive");
  if (entries_.size() != order_ * order_ * order_) {
    std::ostringstream msg;
    msg << "tern table of order " << order_ << " needs " << order_ * order_ * order_
        << " entries, got " << entries_.size();
    throw InputError(msg.str());
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] >= order_) {
      std::ostringstream msg;
      msg << "tern table entry " << i << " = " << entries_[i] << " is outside {0.."
          << order_ - 1 << "}";
      throw InputError(msg.str());
    }
  }
}

Element TernTable::apply(Element a, Element b, Element c) const {
  if (a >= order_ || b >= order_ || c >= order_) {
    std::ostringstream msg;
    msg << "element out of range in apply(" << a << "," << b << "," << c << ") for order "
        << order_;
    throw InputError(msg.str());
  }
  return (*this)(a, b, c);
}

GroupTable::GroupTable(std::size_t order, std::vector<Element> product)
    : order_(order), product_(std::move(product)) {
  if (order_ == 0) throw InputError("group order must be positive");
  if (product_.size() != order_ * order_)
    throw InputError("group product table must have order^2 entries");
  for (Element v : product_)
    if (v >= order_) throw InputError("group product entry out of range");

  auto mul = [this](Element x, Element y) { return product_[x * order_ + y]; };

  bool found = false;
  for (Element e = 0; e < order_ && !found; ++e) {
    bool ok = true;
    for (Element x = 0; x < order_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw InputError("group table has no identity element");

  for (Element x = 0; x < order_; ++x)
    for (Element y = 0; y < order_; ++y)
      for (Element z = 0; z < order_; ++z)
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
          std::ostringstream msg;
          msg << "group table is not associative at (" << x << "," << y << "," << z << ")";
          throw InputError(msg.str());
        }

  inverse_.assign(order_, 0);
  for (Element x = 0; x < order_; ++x) {
    bool has = false;
    for (Element y = 0; y < order_ && !has; ++y) {
      if (mul(x, y) == identity_ && mul(y, x) == identity_) {
        inverse_[x] = y;
        has = true;
      }
    }
    if (!has) {
      std::ostringstream msg;
      msg << "group element " << x << " has no inverse";
      throw InputError(msg.str());
    }
  }
}

GroupTable GroupTable::cyclic(std::size_t n) {
  if (n == 0) throw InputError("cyclic group order must be positive");
  std::vector<Element> product(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) product[x * n + y] = static_cast<Element>((x + y) % n);
  return GroupTable(n, std::move(product));
}

GroupTable GroupTable::symmetric(std::size_t k) {
  if (k == 0) throw InputError("symmetric group needs at least one point");
  std::vector<std::vector<Element>> perms;
  std::vector<Element> p(k);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  const std::size_t g = perms.size();
  std::vector<Element> product(g * g);
  std::vector<Element> composed(k);
  for (std::size_t s = 0; s < g; ++s) {
    for (std::size_t t = 0; t < g; ++t) {
      for (std::size_t i = 0; i < k; ++i) composed[i] = perms[s][perms[t][i]];
      auto it = std::lower_bound(perms.begin(), perms.end(), composed);
      product[s * g + t] = static_cast<Element>(it - perms.begin());
    }
  }
  return GroupTable(g, std::move(product));
}

std::string_view axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::A1: return "A1";
    case Axiom::A2L: return "A2L";
    case Axiom::A2M: return "A2M";
    case Axiom::A2R: return "A2R";
    case Axiom::A3L: return "A3L";
    case Axiom::A3R: return "A3R";
    case Axiom::Quasigroup: return "quasigroup";
  }
  return "?";
}

Axiom parse_axiom(std::string_view name) {
  for (Axiom a : {Axiom::A1, Axiom::A2L, Axiom::A2M, Axiom::A2R, Axiom::A3L, Axiom::A3R,
                  Axiom::Quasigroup}) {
    if (axiom_name(a) == name) return a;
  }
  throw InputError("unknown axiom '" + std::string(name) + "'");
}

bool AxiomReport::all_passed() const {
  return std::all_of(statuses.begin(), statuses.end(),
                     [](const AxiomStatus& s) { return s.passed; });
}

const AxiomStatus* AxiomReport::find(Axiom axiom) const {
  for (const auto& s : statuses)
    if (s.axiom == axiom) return &s;
  return nullptr;
}

bool AxiomReport::passed(Axiom axiom) const {
  const AxiomStatus* s = find(axiom);
  return s != nullptr && s->passed;
}

std::size_t axiom_arity(Axiom axiom) {
  switch (axiom) {
    case Axiom::A1: return 2;
    case Axiom::A2L:
    case Axiom::A2M:
    case Axiom::A2R: return 3;
    case Axiom::A3L:
    case Axiom::A3R: return 4;
    case Axiom::Quasigroup: return 5;
  }
  return 0;
}

std::pair<Element, Element> axiom_sides(const TernTable& tbl, Axiom axiom,
                                        std::span<const Element> x) {
  const auto& T = tbl;
  switch (axiom) {
    case Axiom::A1: return {T(x[0], x[1], x[0]), x[1]};
    case Axiom::A2L: {
      const Element a = x[0], b = x[1], c = x[2];
      return {T(a, b, T(b, a, c)), c};
    }
    case Axiom::A2R: {
      const Element a = x[0], b = x[1], c = x[2];
      return {T(T(c, a, b), b, a), c};
    }
    case Axiom::A2M: {
      const Element a = x[0], b = x[1], c = x[2];
      return {T(a, T(b, c, a), b), c};
    }
    case Axiom::A3L: {
      const Element a = x[0], b = x[1], c = x[2], d = x[3];
      const Element bcd = T(b, c, d);
      return {T(T(a, b, c), c, d), T(T(a, b, bcd), bcd, d)};
    }
    case Axiom::A3R: {
      const Element a = x[0], b = x[1], c = x[2], d = x[3];
      const Element abc = T(a, b, c);
      return {T(a, b, T(b, c, d)), T(a, abc, T(abc, c, d))};
    }
    case Axiom::Quasigroup: break;
  }
  throw InputError("axiom_sides is not defined for the quasigroup property");
}

namespace {

Element section_value(const TernTable& T, Element slot, Element p, Element r, Element u) {
  switch (slot) {
    case 0: return T(u, p, r);
    case 1: return T(p, u, r);
    default: return T(p, r, u);
  }
}

// Advance a little-endian-last odometer; returns false after the last tuple.
bool next_tuple(std::vector<Element>& t, std::size_t q) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < q) return true;
    t[i] = 0;
  }
  return false;
}

}  // namespace

bool witness_refutes(const TernTable& tbl, Axiom axiom, std::span<const Element> w) {
  const std::size_t q = tbl.order();
  if (w.size() != axiom_arity(axiom)) return false;
  if (axiom == Axiom::Quasigroup) {
    if (w[0] > 2) return false;
    for (std::size_t i = 1; i < 5; ++i)
      if (w[i] >= q) return false;
    return w[3] != w[4] && section_value(tbl, w[0], w[1], w[2], w[3]) ==
                               section_value(tbl, w[0], w[1], w[2], w[4]);
  }
  for (Element v : w)
    if (v >= q) return false;
  auto [lhs, rhs] = axiom_sides(tbl, axiom, w);
  return lhs != rhs;
}

AxiomStatus is_ternary_quasigroup(const TernTable& tbl) {
  const std::size_t q = tbl.order();
  AxiomStatus status{Axiom::Quasigroup, true, {}};
  std::vector<std::optional<Element>> seen(q);
  for (Element slot = 0; slot < 3; ++slot) {
    for (Element p = 0; p < q; ++p) {
      for (Element r = 0; r < q; ++r) {
        std::fill(seen.begin(), seen.end(), std::nullopt);
        for (Element u = 0; u < q; ++u) {
          const Element v = section_value(tbl, slot, p, r, u);
          if (seen[v]) {
            status.passed = false;
            status.witness = {slot, p, r, *seen[v], u};
            return status;
          }
          seen[v] = u;
        }
      }
    }
  }
  return status;
}

AxiomStatus check_axiom(const TernTable& tbl, Axiom axiom) {
  if (axiom == Axiom::Quasigroup) return is_ternary_quasigroup(tbl);
  AxiomStatus status{axiom, true, {}};
  std::vector<Element> args(axiom_arity(axiom), 0);
  do {
    auto [lhs, rhs] = axiom_sides(tbl, axiom, args);
    if (lhs != rhs) {
      status.passed = false;
      status.witness = args;
      return status;
    }
  } while (next_tuple(args, tbl.order()));
  return status;
}

AxiomReport check_axioms(const TernTable& tbl, std::span<const Axiom> axioms) {
  AxiomReport report;
  for (Axiom a : axioms) report.statuses.push_back(check_axiom(tbl, a));
  return report;
}

AxiomReport check_axioms(const TernTable& tbl) { return check_axioms(tbl, kTernAxioms); }

TernTable hat(const TernTable& tbl) {
  return TernTable::from_function(tbl.order(),
                                  [&](Element a, Element b, Element c) { return tbl(c, b, a); });
}

TernTable make_affine(std::size_t n) {
  if (n == 0) throw InputError("make_affine needs n >= 1");
  return TernTable::from_function(n, [n](Element p, Element q, Element r) {
    return (p + q + (n - r)) % n;
  });
}

std::string_view variant_name(GroupTernVariant variant) {
  switch (variant) {
    case GroupTernVariant::XZinvY: return "xz^-1y";
    case GroupTernVariant::AinvBC: return "a^-1bc";
    case GroupTernVariant::ABCinv: return "abc^-1";
    case GroupTernVariant::ABinvC: return "ab^-1c";
  }
  return "?";
}

GroupTernVariant parse_group_variant(std::string_view name) {
  for (auto v : {GroupTernVariant::XZinvY, GroupTernVariant::AinvBC, GroupTernVariant::ABCinv,
                 GroupTernVariant::ABinvC})
    if (variant_name(v) == name) return v;
  throw InputError("unknown group tern variant '" + std::string(name) + "'");
}

TernTable make_group_tern(const GroupTable& g, GroupTernVariant variant) {
  return TernTable::from_function(g.order(), [&](Element a, Element b, Element c) {
    switch (variant) {
      case GroupTernVariant::XZinvY: return g.multiply(g.multiply(a, g.inverse(c)), b);
      case GroupTernVariant::AinvBC: return g.multiply(g.multiply(g.inverse(a), b), c);
      case GroupTernVariant::ABCinv: return g.multiply(g.multiply(a, b), g.inverse(c));
      case GroupTernVariant::ABinvC: return g.multiply(g.multiply(a, g.inverse(b)), c);
    }
    return Element{0};
  });
}

TernTable relabel(const TernTable& tbl, std::span<const Element> perm) {
  const std::size_t q = tbl.order();
  if (perm.size() != q) throw InputError("relabeling permutation has the wrong size");
  std::vector<Element> entries(q * q * q);
  for (Element a = 0; a < q; ++a)
    for (Element b = 0; b < q; ++b)
      for (Element c = 0; c < q; ++c)
        entries[(perm[a] * q + perm[b]) * q + perm[c]] = perm[tbl(a, b, c)];
  return TernTable(q, std::move(entries));
}

std::vector<Element> canonical_entries(const TernTable& tbl) {
  std::vector<Element> perm(tbl.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Element> best(tbl.entries().begin(), tbl.entries().end());
  while (std::next_permutation(perm.begin(), perm.end())) {
    TernTable image = relabel(tbl, perm);
    if (std::lexicographical_compare(image.entries().begin(), image.entries().end(),
                                     best.begin(), best.end()))
      best.assign(image.entries().begin(), image.entries().end());
  }
  return best;
}

bool isomorphic(const TernTable& lhs, const TernTable& rhs) {
  return lhs.order() == rhs.order() && canonical_entries(lhs) == canonical_entries(rhs);
}

}  // namespace ternlab
