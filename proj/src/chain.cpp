#include "ternlab/chain.hpp"

#include <sstream>

#include "ternlab/errors.hpp"

namespace ternlab {

TupleGen::TupleGen(std::vector<Element> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InputError("a generator needs at least one coordinate");
}

void TupleGen::require_order(std::size_t q) const {
  for (Element x : coords_)
    if (x >= q) {
      std::ostringstream msg;
      msg << "generator " << *this << " has a coordinate outside {0.." << q - 1 << "}";
      throw InputError(msg.str());
    }
}

std::ostream& operator<<(std::ostream& os, const TupleGen& t) {
  os << '(';
  for (std::size_t k = 0; k < t.size(); ++k) os << (k ? "," : "") << t[k];
  return os << ')';
}

std::string to_string(const TupleGen& t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

ChainVector::ChainVector(const TupleGen& gen, Coefficient coeff) : degree_(gen.degree()) {
  add(gen, coeff);
}

ChainVector::Coefficient ChainVector::coefficient(const TupleGen& gen) const {
  auto it = terms_.find(gen);
  return it == terms_.end() ? 0 : it->second;
}

void ChainVector::add(const TupleGen& gen, Coefficient coeff) {
  if (gen.degree() != degree_) {
    std::ostringstream msg;
    msg << "cannot add generator " << gen << " of degree " << gen.degree()
        << " to a chain of degree " << degree_;
    throw InputError(msg.str());
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(gen, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

ChainVector& ChainVector::operator+=(const ChainVector& other) {
  if (other.degree_ != degree_ && !other.is_zero())
    throw InputError("cannot add chains of different degrees");
  for (const auto& [gen, coeff] : other.terms_) add(gen, coeff);
  return *this;
}

ChainVector& ChainVector::operator-=(const ChainVector& other) {
  if (other.degree_ != degree_ && !other.is_zero())
    throw InputError("cannot subtract chains of different degrees");
  for (const auto& [gen, coeff] : other.terms_) add(gen, -coeff);
  return *this;
}

ChainVector ChainVector::operator-() const { return -1 * *this; }

ChainVector operator*(ChainVector::Coefficient k, const ChainVector& c) {
  ChainVector out(c.degree());
  if (k == 0) return out;
  for (const auto& [gen, coeff] : c.terms()) out.terms_.emplace_hint(out.terms_.end(), gen, k * coeff);
  return out;
}

std::ostream& operator<<(std::ostream& os, const ChainVector& c) {
  if (c.is_zero()) return os << '0';
  bool first = true;
  for (const auto& [gen, coeff] : c.terms()) {
    if (coeff < 0)
      os << (first ? "-" : " - ");
    else if (!first)
      os << " + ";
    const auto mag = coeff < 0 ? -coeff : coeff;
    if (mag != 1) os << mag;
    os << gen;
    first = false;
  }
  return os;
}

std::string_view differential_name(Differential d) {
  switch (d) {
    case Differential::L: return "L";
    case Differential::R: return "R";
    case Differential::Full: return "full";
  }
  return "?";
}

Differential parse_differential(std::string_view name) {
  if (name == "L") return Differential::L;
  if (name == "R") return Differential::R;
  if (name == "full") return Differential::Full;
  throw InputError("unknown differential variant '" + std::string(name) + "'");
}

namespace {

void require_face_index(const TupleGen& t, std::size_t i) {
  if (t.degree() < 0) throw InputError("face maps are defined on degrees n >= 0");
  if (i > static_cast<std::size_t>(t.degree())) {
    std::ostringstream msg;
    msg << "face index " << i << " out of range for degree " << t.degree();
    throw InputError(msg.str());
  }
}

}  // namespace

TupleGen substitute(const TupleGen& t, std::size_t k, const TernTable& tbl) {
  t.require_order(tbl.order());
  const int n = t.degree();
  if (k < 1 || static_cast<int>(k) > n) {
    std::ostringstream msg;
    msg << "substitution index " << k << " out of range 1.." << n;
    throw InputError(msg.str());
  }
  std::vector<Element> x(t.coords().begin(), t.coords().end());
  x[k] = tbl(t[k - 1], t[k], t[k + 1]);
  return TupleGen(std::move(x));
}

TupleGen face_L(const TernTable& tbl, std::size_t i, const TupleGen& t) {
  require_face_index(t, i);
  t.require_order(tbl.order());
  const std::size_t len = t.size() - 1;  // n + 1 output coordinates, k = 1..n+1
  std::vector<Element> y(len);
  for (std::size_t k = len; k >= 1; --k) {
    y[k - 1] = k > i ? t[k] : tbl(t[k - 1], t[k], y[k]);
  }
  return TupleGen(std::move(y));
}

TupleGen face_R(const TernTable& tbl, std::size_t i, const TupleGen& t) {
  require_face_index(t, i);
  t.require_order(tbl.order());
  const std::size_t len = t.size() - 1;  // k = 0..n
  std::vector<Element> y(len);
  for (std::size_t k = 0; k < len; ++k) {
    y[k] = k <= i ? t[k] : tbl(y[k - 1], t[k], t[k + 1]);
  }
  return TupleGen(std::move(y));
}

TupleGen face(const TernTable& tbl, FaceSide side, std::size_t i, const TupleGen& t) {
  return side == FaceSide::L ? face_L(tbl, i, t) : face_R(tbl, i, t);
}

ChainVector face_combined(const TernTable& tbl, std::size_t i, const TupleGen& t) {
  ChainVector out(face_L(tbl, i, t));
  out.add(face_R(tbl, i, t), -1);
  return out;
}

ChainVector apply_face(const TernTable& tbl, FaceSide side, std::size_t i, const ChainVector& c) {
  ChainVector out(c.degree() - 1);
  for (const auto& [gen, coeff] : c.terms()) out.add(face(tbl, side, i, gen), coeff);
  return out;
}

ChainVector apply_face_combined(const TernTable& tbl, std::size_t i, const ChainVector& c) {
  ChainVector out(c.degree() - 1);
  for (const auto& [gen, coeff] : c.terms()) {
    out.add(face_L(tbl, i, gen), coeff);
    out.add(face_R(tbl, i, gen), -coeff);
  }
  return out;
}

TupleGen reverse(const TupleGen& t) {
  return TupleGen(std::vector<Element>(t.coords().rbegin(), t.coords().rend()));
}

ChainVector reverse(const ChainVector& c) {
  ChainVector out(c.degree());
  for (const auto& [gen, coeff] : c.terms()) out.add(reverse(gen), coeff);
  return out;
}

ChainVector boundary(const TernTable& tbl, Differential variant, const TupleGen& t) {
  const int n = t.degree();
  if (n < 0) throw InputError("boundary is defined on degrees n >= 0");
  ChainVector out(n - 1);
  for (int i = 0; i <= n; ++i) {
    const ChainVector::Coefficient sign = (i % 2 == 0) ? 1 : -1;
    if (variant != Differential::R) out.add(face_L(tbl, i, t), sign);
    if (variant == Differential::R) out.add(face_R(tbl, i, t), sign);
    if (variant == Differential::Full) out.add(face_R(tbl, i, t), -sign);
  }
  return out;
}

ChainVector boundary(const TernTable& tbl, Differential variant, const ChainVector& c) {
  if (c.degree() < 0) throw InputError("boundary is defined on degrees n >= 0");
  ChainVector out(c.degree() - 1);
  for (const auto& [gen, coeff] : c.terms()) {
    const ChainVector faces = boundary(tbl, variant, gen);
    for (const auto& [face_gen, face_coeff] : faces.terms())
      out.add(face_gen, coeff * face_coeff);
  }
  return out;
}

bool is_degenerate(const TupleGen& t) {
  for (std::size_t i = 0; i + 2 < t.size(); ++i)
    if (t[i] == t[i + 2]) return true;
  return false;
}

ChainVector project_nondegenerate(const ChainVector& c) {
  ChainVector out(c.degree());
  for (const auto& [gen, coeff] : c.terms())
    if (!is_degenerate(gen)) out.add(gen, coeff);
  return out;
}

ChainVector project_degenerate(const ChainVector& c) {
  ChainVector out(c.degree());
  for (const auto& [gen, coeff] : c.terms())
    if (is_degenerate(gen)) out.add(gen, coeff);
  return out;
}

}  // namespace ternlab
