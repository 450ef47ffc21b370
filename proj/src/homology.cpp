#include "ternlab/homology.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ternlab/errors.hpp"
#include "ternlab/parallel.hpp"

namespace ternlab {

std::string_view subcomplex_name(Subcomplex s) {
  switch (s) {
    case Subcomplex::Full: return "full";
    case Subcomplex::Degenerate: return "degenerate";
    case Subcomplex::Normalized: return "normalized";
  }
  return "?";
}

Subcomplex parse_subcomplex(std::string_view name) {
  if (name == "full") return Subcomplex::Full;
  if (name == "degenerate") return Subcomplex::Degenerate;
  if (name == "normalized") return Subcomplex::Normalized;
  throw InputError("unknown subcomplex '" + std::string(name) + "'");
}

std::vector<Axiom> closure_axioms(Differential variant) {
  switch (variant) {
    case Differential::L: return {Axiom::A1, Axiom::A2L};
    case Differential::R: return {Axiom::A1, Axiom::A2R};
    case Differential::Full: return {Axiom::A1, Axiom::A2L, Axiom::A2R};
  }
  return {};
}

void require_admissible(const TernTable& tbl, const ComplexSelector& sel) {
  if (sel.subcomplex == Subcomplex::Full) return;
  for (Axiom a : closure_axioms(sel.variant)) {
    if (!check_axiom(tbl, a).passed) {
      std::ostringstream msg;
      msg << "the " << subcomplex_name(sel.subcomplex) << " complex for differential "
          << differential_name(sel.variant) << " requires axiom " << axiom_name(a)
          << ", which the table does not satisfy";
      throw PreconditionError(msg.str());
    }
  }
}

EngineConfig EngineConfig::from_env() {
  EngineConfig config;
  if (const char* v = std::getenv("TERNLAB_MAX_GENERATORS")) {
    try {
      config.max_generators = std::stoull(v);
    } catch (const std::exception&) {
      throw InputError("TERNLAB_MAX_GENERATORS must be a non-negative integer");
    }
  }
  if (const char* v = std::getenv("TERNLAB_THREADS")) {
    try {
      config.threads = std::max<std::size_t>(1, std::stoull(v));
    } catch (const std::exception&) {
      throw InputError("TERNLAB_THREADS must be a positive integer");
    }
  }
  return config;
}

namespace {

// q^len, or nullopt when it exceeds `cap`.
std::optional<std::size_t> bounded_power(std::size_t q, std::size_t len, std::size_t cap) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < len; ++i) {
    if (q != 0 && total > cap / q) return std::nullopt;
    total *= q;
  }
  if (total > cap) return std::nullopt;
  return total;
}

std::size_t tuple_code(const TupleGen& t, std::size_t q) {
  std::size_t code = 0;
  for (Element x : t.coords()) code = code * q + x;
  return code;
}

bool in_subcomplex(const TupleGen& t, Subcomplex sub) {
  switch (sub) {
    case Subcomplex::Full: return true;
    case Subcomplex::Degenerate: return is_degenerate(t);
    case Subcomplex::Normalized: return !is_degenerate(t);
  }
  return false;
}

}  // namespace

Basis::Basis(std::size_t q, int degree, Subcomplex sub, const EngineConfig& config)
    : q_(q), degree_(degree) {
  if (q == 0) throw InputError("basis needs a positive order");
  if (degree < -1) return;  // C_n = 0 below degree -1
  const std::size_t len = static_cast<std::size_t>(degree + 2);
  const auto total = bounded_power(q, len, config.max_generators);
  if (!total) {
    std::ostringstream msg;
    msg << "degree " << degree << " over " << q << " elements has more than "
        << config.max_generators << " generators";
    throw ResourceError(msg.str());
  }
  position_.assign(*total, -1);
  std::vector<Element> coords(len, 0);
  for (std::size_t code = 0; code < *total; ++code) {
    std::size_t rest = code;
    for (std::size_t k = len; k-- > 0;) {
      coords[k] = static_cast<Element>(rest % q);
      rest /= q;
    }
    TupleGen t(coords);
    if (in_subcomplex(t, sub)) {
      position_[code] = static_cast<std::int64_t>(gens_.size());
      gens_.push_back(std::move(t));
    }
  }
}

std::optional<std::size_t> Basis::index_of(const TupleGen& t) const {
  if (t.degree() != degree_ || position_.empty()) return std::nullopt;
  for (Element x : t.coords())
    if (x >= q_) return std::nullopt;
  const std::int64_t pos = position_[tuple_code(t, q_)];
  if (pos < 0) return std::nullopt;
  return static_cast<std::size_t>(pos);
}

std::vector<TupleGen> basis(std::size_t q, int n, Subcomplex sub, const EngineConfig& config) {
  if (n < -1) throw InputError("basis degree must be >= -1");
  return Basis(q, n, sub, config).generators();
}

BoundaryMatrix build_matrix(const TernTable& tbl, int n, const ComplexSelector& sel,
                            const EngineConfig& config) {
  if (n < 0) throw InputError("boundary matrices are defined for degrees n >= 0");
  require_admissible(tbl, sel);
  const std::size_t q = tbl.order();
  Basis rows(q, n - 1, sel.subcomplex, config);
  Basis cols(q, n, sel.subcomplex, config);

  std::vector<ChainVector> images(cols.size(), ChainVector(n - 1));
  parallel_for(cols.size(), config.threads,
               [&](std::size_t j) { images[j] = boundary(tbl, sel.variant, cols[j]); });

  SparseMatrix matrix(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [gen, coeff] : images[j].terms()) {
      if (auto i = rows.index_of(gen)) {
        matrix.add(*i, j, coeff);
      } else if (sel.subcomplex == Subcomplex::Degenerate) {
        std::ostringstream msg;
        msg << "boundary of degenerate generator " << cols[j] << " leaves the degenerate span at "
            << gen;
        throw std::logic_error(msg.str());
      }
    }
  }
  return BoundaryMatrix{n, sel, std::move(rows), std::move(cols), std::move(matrix)};
}

std::string HomologyGroup::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank > 0) {
    os << "Z";
    if (rank > 1) os << "^" << rank;
    first = false;
  }
  for (const auto& t : torsion) {
    os << (first ? "" : " + ") << "Z_" << t.get_str();
    first = false;
  }
  return os.str();
}

std::vector<HomologyGroup> homology_range(const TernTable& tbl, int max_degree,
                                          const ComplexSelector& sel,
                                          const EngineConfig& config) {
  if (max_degree < -1) throw InputError("max degree must be >= -1");
  require_admissible(tbl, sel);
  const std::size_t q = tbl.order();

  // rank_out[n + 1] is the rank of the differential out of degree n.
  std::vector<std::size_t> rank_out(max_degree + 3, 0);
  std::vector<std::vector<Integer>> torsion_into(max_degree + 2);
  for (int n = 0; n <= max_degree + 1; ++n) {
    const BoundaryMatrix m = build_matrix(tbl, n, sel, config);
    const SmithForm snf = SmithForm::compute(m.matrix);
    rank_out[n + 1] = snf.rank();
    torsion_into[n] = snf.torsion();  // torsion lands in degree n - 1
  }

  std::vector<HomologyGroup> out;
  for (int n = -1; n <= max_degree; ++n) {
    const std::size_t dim = Basis(q, n, sel.subcomplex, config).size();
    HomologyGroup h;
    h.rank = dim - rank_out[n + 1] - rank_out[n + 2];
    h.torsion = torsion_into[n + 1];
    out.push_back(std::move(h));
  }
  return out;
}

HomologyGroup homology(const TernTable& tbl, int n, const ComplexSelector& sel,
                       const EngineConfig& config) {
  if (n < -1) throw InputError("homology degree must be >= -1");
  require_admissible(tbl, sel);
  const std::size_t q = tbl.order();
  const std::size_t dim = Basis(q, n, sel.subcomplex, config).size();
  std::size_t rank_out = 0;
  if (n >= 0) rank_out = SmithForm::compute(build_matrix(tbl, n, sel, config).matrix).rank();
  const SmithForm incoming = SmithForm::compute(build_matrix(tbl, n + 1, sel, config).matrix);
  return HomologyGroup{dim - rank_out - incoming.rank(), incoming.torsion()};
}

CycleClass cycle_class(const TernTable& tbl, const ComplexSelector& sel, const ChainVector& z_in,
                       const EngineConfig& config) {
  require_admissible(tbl, sel);
  const int n = z_in.degree();
  if (n < -1) throw InputError("chains live in degrees n >= -1");
  for (const auto& [gen, coeff] : z_in.terms()) gen.require_order(tbl.order());

  ChainVector z = z_in;
  if (sel.subcomplex == Subcomplex::Normalized) {
    z = project_nondegenerate(z_in);
  } else if (sel.subcomplex == Subcomplex::Degenerate) {
    if (project_nondegenerate(z_in) != ChainVector(n))
      throw InputError("chain is not in the degenerate subcomplex");
  }

  CycleClass result;
  if (n >= 0) {
    ChainVector bz = boundary(tbl, sel.variant, z);
    if (sel.subcomplex == Subcomplex::Normalized) bz = project_nondegenerate(bz);
    if (!bz.is_zero()) {
      result.kind = CycleClass::Kind::NotACycle;
      result.boundary = std::move(bz);
      return result;
    }
  }
  if (z.is_zero()) return result;

  const BoundaryMatrix incoming = build_matrix(tbl, n + 1, sel, config);
  const SmithForm snf = SmithForm::compute(incoming.matrix, true);
  std::vector<Integer> vec(incoming.rows.size(), 0);
  for (const auto& [gen, coeff] : z.terms()) {
    auto i = incoming.rows.index_of(gen);
    if (!i) throw InputError("chain term " + to_string(gen) + " is outside the selected basis");
    vec[*i] = Integer(static_cast<long>(coeff));
  }
  const std::vector<Integer> w = snf.apply_row_transform(std::move(vec));
  Integer order = 1;
  const auto& d = snf.divisors();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i >= d.size()) {
      if (w[i] != 0) {
        result.kind = CycleClass::Kind::Infinite;
        return result;
      }
      continue;
    }
    const Integer g = gcd(d[i], w[i]);
    order = lcm(order, Integer(d[i] / g));
  }
  result.order = order;
  return result;
}

}  // namespace ternlab
