#include "ternlab/invariants.hpp"

#include <numeric>
#include <sstream>

#include "ternlab/errors.hpp"
#include "ternlab/homology.hpp"
#include "ternlab/parallel.hpp"
#include "ternlab/smith.hpp"

namespace ternlab {

Cochain::Cochain(std::size_t order, std::size_t arity, std::uint64_t modulus)
    : order_(order), arity_(arity), modulus_(modulus) {
  if (order == 0) throw InputError("cochain needs a positive carrier order");
  if (arity < 1) throw InputError("cochain arity must be positive");
  if (modulus < 2) throw InputError("cochain modulus must be at least 2");
  std::size_t size = 1;
  for (std::size_t i = 0; i < arity; ++i) size *= order;
  values_.assign(size, 0);
}

std::size_t Cochain::index_of(std::span<const Element> tuple) const {
  if (tuple.size() != arity_) {
    std::ostringstream msg;
    msg << "cochain of arity " << arity_ << " evaluated on a tuple of length " << tuple.size();
    throw InputError(msg.str());
  }
  std::size_t idx = 0;
  for (Element x : tuple) {
    if (x >= order_) throw InputError("cochain argument outside the carrier");
    idx = idx * order_ + x;
  }
  return idx;
}

TupleGen Cochain::tuple_at(std::size_t index) const {
  std::vector<Element> coords(arity_);
  for (std::size_t k = arity_; k-- > 0;) {
    coords[k] = static_cast<Element>(index % order_);
    index /= order_;
  }
  return TupleGen(std::move(coords));
}

std::uint64_t Cochain::operator()(std::span<const Element> tuple) const {
  return values_[index_of(tuple)];
}

void Cochain::set(std::span<const Element> tuple, std::int64_t value) {
  const auto m = static_cast<std::int64_t>(modulus_);
  values_[index_of(tuple)] = static_cast<std::uint64_t>(((value % m) + m) % m);
}

bool Cochain::is_zero() const {
  for (auto v : values_)
    if (v != 0) return false;
  return true;
}

std::uint64_t GroupRingElement::total() const {
  return std::accumulate(multiplicity.begin(), multiplicity.end(), std::uint64_t{0});
}

std::string GroupRingElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < multiplicity.size(); ++k) {
    if (multiplicity[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << multiplicity[k];
      continue;
    }
    if (multiplicity[k] != 1) os << multiplicity[k];
    os << 't';
    if (k > 1) os << '^' << k;
  }
  return first ? "0" : os.str();
}

namespace {

// f(boundary x) mod m for a tuple x of length arity + 1.
std::uint64_t evaluate_on_boundary(const TernTable& tbl, const Cochain& f, const TupleGen& x) {
  const auto m = static_cast<std::int64_t>(f.modulus());
  std::int64_t acc = 0;
  const ChainVector b = boundary(tbl, Differential::Full, x);
  for (const auto& [gen, coeff] : b.terms()) {
    acc = (acc + (coeff % m) * static_cast<std::int64_t>(f(gen))) % m;
  }
  return static_cast<std::uint64_t>((acc + m) % m);
}

bool advance(std::vector<Element>& t, std::size_t q) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < q) return true;
    t[i] = 0;
  }
  return false;
}

void require_compatible(const TernTable& tbl, const Cochain& f) {
  if (f.order() != tbl.order())
    throw InputError("cochain and table have different carrier orders");
}

std::uint64_t to_mod(const Integer& v, std::uint64_t m) {
  Integer r = v % Integer(static_cast<unsigned long>(m));
  if (r < 0) r += static_cast<unsigned long>(m);
  return r.get_ui();
}

}  // namespace

CocycleCheck check_cocycle(const TernTable& tbl, const Cochain& f) {
  require_compatible(tbl, f);
  CocycleCheck out;
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    if (f.values()[i] == 0) continue;
    TupleGen t = f.tuple_at(i);
    if (is_degenerate(t)) {
      out.passed = false;
      out.failed = CocycleCheck::Condition::Degeneracy;
      out.witness.assign(t.coords().begin(), t.coords().end());
      out.value = f.values()[i];
      return out;
    }
  }
  std::vector<Element> x(f.arity() + 1, 0);
  do {
    const std::uint64_t v = evaluate_on_boundary(tbl, f, TupleGen(x));
    if (v != 0) {
      out.passed = false;
      out.failed = CocycleCheck::Condition::Closure;
      out.witness = x;
      out.value = v;
      return out;
    }
  } while (advance(x, tbl.order()));
  return out;
}

Cochain coboundary(const TernTable& tbl, const Cochain& g) {
  require_compatible(tbl, g);
  Cochain out(g.order(), g.arity() + 1, g.modulus());
  for (std::size_t i = 0; i < out.values().size(); ++i)
    out.set_index(i, evaluate_on_boundary(tbl, g, out.tuple_at(i)));
  return out;
}

CocycleSpace cocycle_space(const TernTable& tbl, std::uint64_t modulus) {
  if (modulus < 2) throw InputError("modulus must be at least 2");
  if (!check_axioms(tbl).all_passed())
    throw PreconditionError("cocycle_space needs a tern (A1, A2L, A2M, A2R, A3L, A3R)");
  const std::size_t q = tbl.order();
  const Integer m(static_cast<unsigned long>(modulus));
  CocycleSpace out;
  out.modulus = modulus;

  // Cocycles: kernel of (normalized boundary 2 -> 1)^T over Z_m. Unknowns are
  // the values on non-degenerate triples; degenerate triples are pinned to 0.
  {
    const BoundaryMatrix b2 = build_matrix(tbl, 2, kTernHomology);
    const SparseMatrix constraints = b2.matrix.transposed();
    const SmithForm snf = SmithForm::compute(constraints, true);
    const std::size_t unknowns = constraints.cols();
    for (std::size_t i = 0; i < unknowns; ++i) {
      Integer scale = 1;
      if (i < snf.rank()) {
        scale = m / gcd(snf.divisors()[i], m);
        if (scale == m) continue;  // d_i is a unit mod m
      }
      std::vector<Integer> y(unknowns, 0);
      y[i] = scale;
      const std::vector<Integer> sol = snf.apply_col_transform(std::move(y));
      Cochain f(q, 3, modulus);
      for (std::size_t k = 0; k < unknowns; ++k)
        f.set(b2.rows[k].coords(), static_cast<std::int64_t>(to_mod(sol[k], modulus)));
      if (!f.is_zero()) out.cocycles.push_back(std::move(f));
    }
  }

  // Coboundaries: image of (normalized boundary 1 -> 0)^T. With
  // U A V = D, A V e_i = d_i U^{-1} e_i, so the images of V e_i generate.
  {
    const BoundaryMatrix b1 = build_matrix(tbl, 1, kTernHomology);
    const SparseMatrix delta = b1.matrix.transposed();
    const SmithForm snf = SmithForm::compute(delta, true);
    const std::size_t unknowns = delta.cols();
    for (std::size_t i = 0; i < snf.rank(); ++i) {
      if (snf.divisors()[i] % m == 0) continue;
      std::vector<Integer> y(unknowns, 0);
      y[i] = 1;
      const std::vector<Integer> g_vec = snf.apply_col_transform(std::move(y));
      Cochain g(q, 2, modulus);
      for (std::size_t k = 0; k < unknowns; ++k)
        g.set(b1.rows[k].coords(), static_cast<std::int64_t>(to_mod(g_vec[k], modulus)));
      Cochain dg = coboundary(tbl, g);
      if (dg.is_zero()) continue;
      out.coboundaries.push_back(std::move(dg));
      out.sources.push_back(std::move(g));
    }
  }
  return out;
}

bool in_span(const std::vector<Cochain>& generators, const Cochain& f) {
  const std::size_t rows = f.values().size();
  for (const auto& g : generators)
    if (g.values().size() != rows || g.modulus() != f.modulus())
      throw InputError("cochains in a span test must share shape and modulus");
  const Integer m(static_cast<unsigned long>(f.modulus()));
  SparseMatrix system(rows, generators.size() + rows);
  for (std::size_t j = 0; j < generators.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i)
      system.add(i, j, Integer(static_cast<unsigned long>(generators[j].values()[i])));
  for (std::size_t i = 0; i < rows; ++i) system.add(i, generators.size() + i, m);

  const SmithForm snf = SmithForm::compute(system, true);
  std::vector<Integer> rhs(rows);
  for (std::size_t i = 0; i < rows; ++i) rhs[i] = static_cast<unsigned long>(f.values()[i]);
  const std::vector<Integer> w = snf.apply_row_transform(std::move(rhs));
  for (std::size_t i = 0; i < rows; ++i) {
    if (i < snf.rank()) {
      if (!mpz_divisible_p(w[i].get_mpz_t(), snf.divisors()[i].get_mpz_t())) return false;
    } else if (w[i] != 0) {
      return false;
    }
  }
  return true;
}

std::uint64_t pair(const Cochain& f, const ChainVector& z) {
  if (!z.is_zero() && z.degree() != f.degree()) {
    std::ostringstream msg;
    msg << "cannot pair an arity-" << f.arity() << " cochain with a degree-" << z.degree()
        << " chain";
    throw InputError(msg.str());
  }
  const auto m = static_cast<std::int64_t>(f.modulus());
  std::int64_t acc = 0;
  for (const auto& [gen, coeff] : z.terms())
    acc = (acc + (coeff % m) * static_cast<std::int64_t>(f(gen))) % m;
  return static_cast<std::uint64_t>((acc + m) % m);
}

GroupRingElement state_sum(const Diagram& d, const TernTable& tbl, const Cochain& f,
                           std::size_t threads) {
  require_compatible(tbl, f);
  if (f.degree() != d.dimension) {
    std::ostringstream msg;
    msg << "a dimension-" << d.dimension << " diagram needs an arity-" << d.dimension + 2
        << " cochain";
    throw InputError(msg.str());
  }
  const CocycleCheck check = check_cocycle(tbl, f);
  if (!check.passed) throw PreconditionError("state_sum needs a cocycle");

  const std::vector<Coloring> colorings = enumerate_colorings(d, tbl, threads);
  std::vector<std::uint64_t> values(colorings.size());
  parallel_for(colorings.size(), threads, [&](std::size_t i) {
    values[i] = pair(f, extract_cycle(d, tbl, colorings[i]));
  });
  GroupRingElement out{f.modulus(), std::vector<std::uint64_t>(f.modulus(), 0)};
  for (auto v : values) ++out.multiplicity[v];
  return out;
}

}  // namespace ternlab
