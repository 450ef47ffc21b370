#include "ternlab/diagram.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

#include "ternlab/errors.hpp"
#include "ternlab/parallel.hpp"

namespace ternlab {

std::vector<Quad> Diagram::relations() const {
  std::vector<Quad> out;
  if (dimension == 1) {
    for (const auto& c : crossings) out.push_back(c.quad);
  } else {
    for (const auto& s : strata) out.push_back(s.quad);
  }
  return out;
}

std::optional<std::size_t> Diagram::region_index(std::string_view name) const {
  auto it = std::find(region_names.begin(), region_names.end(), name);
  if (it == region_names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - region_names.begin());
}

namespace {

void require_region(const Diagram& d, std::size_t r, const std::string& where) {
  if (r >= d.region_count()) {
    std::ostringstream msg;
    msg << where << ": region index " << r << " does not exist";
    throw InputError(msg.str());
  }
}

void require_quad(const Diagram& d, const Quad& q, const std::string& where) {
  for (std::size_t r : {q.x, q.y, q.z, q.w}) require_region(d, r, where);
}

void require_sign(int sign, const std::string& where) {
  if (sign != 1 && sign != -1) throw InputError(where + ": sign must be +1 or -1");
}

bool same_pair(std::size_t a, std::size_t b, std::size_t u, std::size_t v) {
  return (a == u && b == v) || (a == v && b == u);
}

}  // namespace

void validate_diagram(const Diagram& d) {
  if (d.dimension != 1 && d.dimension != 2)
    throw InputError("diagram dimension must be 1 or 2");
  std::set<std::string> names(d.region_names.begin(), d.region_names.end());
  if (names.size() != d.region_names.size()) throw InputError("duplicate region id");

  if (d.dimension == 1) {
    if (!d.strata.empty() || !d.triple_points.empty())
      throw InputError("a dimension-1 diagram has crossings, not strata or triple points");
    for (std::size_t k = 0; k < d.crossings.size(); ++k) {
      const auto& c = d.crossings[k];
      const std::string where = "crossing " + std::to_string(k);
      require_sign(c.sign, where);
      require_quad(d, c.quad, where);
      for (std::size_t r : c.ascending) require_region(d, r, where);
      const auto [r1, r2, r3] = c.ascending;
      const Quad& q = c.quad;
      const bool under = same_pair(r1, r2, q.x, q.y) || same_pair(r1, r2, q.z, q.w);
      const bool over = same_pair(r2, r3, q.w, q.x) || same_pair(r2, r3, q.y, q.z);
      if (!under || !over)
        throw InputError(where +
                         ": ascending path must cross the under-arc and then the over-arc");
    }
  } else {
    if (!d.crossings.empty()) throw InputError("a dimension-2 diagram has no crossings");
    for (std::size_t k = 0; k < d.strata.size(); ++k)
      require_quad(d, d.strata[k].quad, "stratum " + std::to_string(k));
    for (std::size_t k = 0; k < d.triple_points.size(); ++k) {
      const auto& t = d.triple_points[k];
      const std::string where = "triple point " + std::to_string(k);
      require_sign(t.sign, where);
      for (std::size_t r : t.ascending) require_region(d, r, where);
    }
  }
}

namespace {

using nlohmann::json;

std::string region_key(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw InputError("region ids must be strings or integers");
}

std::size_t lookup(const Diagram& d, const json& v, const std::string& where) {
  const std::string key = region_key(v);
  auto idx = d.region_index(key);
  if (!idx) throw InputError(where + ": unknown region id '" + key + "'");
  return *idx;
}

Quad parse_quad(const Diagram& d, const json& j, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": quad must be an object with x, y, z, w");
  Quad q;
  for (auto [name, slot] : {std::pair{"x", &q.x}, {"y", &q.y}, {"z", &q.z}, {"w", &q.w}}) {
    if (!j.contains(name)) throw InputError(where + ": quad is missing '" + name + "'");
    *slot = lookup(d, j.at(name), where);
  }
  return q;
}

int parse_sign(const json& j, const std::string& where) {
  if (!j.contains("sign")) return 1;
  if (!j.at("sign").is_number_integer()) throw InputError(where + ": sign must be an integer");
  return j.at("sign").get<int>();
}

template <std::size_t N>
std::array<std::size_t, N> parse_path(const Diagram& d, const json& j, const std::string& where) {
  if (!j.contains("ascending") || !j.at("ascending").is_array() || j.at("ascending").size() != N) {
    std::ostringstream msg;
    msg << where << ": ascending path must list " << N << " regions";
    throw InputError(msg.str());
  }
  std::array<std::size_t, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = lookup(d, j.at("ascending")[i], where);
  return out;
}

}  // namespace

Diagram parse_diagram(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed diagram JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("diagram JSON must be an object");
  Diagram d;
  try {
    if (!doc.contains("dimension") || !doc.at("dimension").is_number_integer())
      throw InputError("diagram needs an integer 'dimension'");
    d.dimension = doc.at("dimension").get<int>();
    if (d.dimension != 1 && d.dimension != 2)
      throw InputError("diagram dimension must be 1 or 2");
    if (!doc.contains("regions") || !doc.at("regions").is_array())
      throw InputError("diagram needs a 'regions' array");
    for (const auto& r : doc.at("regions")) d.region_names.push_back(region_key(r));

    const auto array_field = [&](const char* key) -> json {
      if (!doc.contains(key)) return json::array();
      if (!doc.at(key).is_array()) throw InputError(std::string("'") + key + "' must be an array");
      return doc.at(key);
    };
    // Region lookups below need the complete region list.
    std::set<std::string> names(d.region_names.begin(), d.region_names.end());
    if (names.size() != d.region_names.size()) throw InputError("duplicate region id");

    if (d.dimension == 1) {
      if (doc.contains("strata") || doc.contains("triple_points"))
        throw InputError("a dimension-1 diagram has crossings, not strata or triple points");
      std::size_t k = 0;
      for (const auto& c : array_field("crossings")) {
        const std::string where = "crossing " + std::to_string(k++);
        if (!c.is_object() || !c.contains("quad")) throw InputError(where + ": missing quad");
        Crossing crossing;
        crossing.sign = parse_sign(c, where);
        crossing.quad = parse_quad(d, c.at("quad"), where);
        crossing.ascending = parse_path<3>(d, c, where);
        d.crossings.push_back(crossing);
      }
    } else {
      if (doc.contains("crossings")) throw InputError("a dimension-2 diagram has no crossings");
      std::size_t k = 0;
      for (const auto& s : array_field("strata")) {
        const std::string where = "stratum " + std::to_string(k++);
        if (!s.is_object() || !s.contains("quad")) throw InputError(where + ": missing quad");
        d.strata.push_back(Stratum{parse_quad(d, s.at("quad"), where)});
      }
      k = 0;
      for (const auto& t : array_field("triple_points")) {
        const std::string where = "triple point " + std::to_string(k++);
        if (!t.is_object()) throw InputError(where + ": must be an object");
        TriplePoint tp;
        tp.sign = parse_sign(t, where);
        tp.ascending = parse_path<4>(d, t, where);
        d.triple_points.push_back(tp);
      }
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed diagram: ") + e.what());
  }
  validate_diagram(d);
  return d;
}

bool is_coloring(const Diagram& d, const TernTable& tbl, const Coloring& c) {
  if (c.size() != d.region_count()) return false;
  for (Element v : c)
    if (v >= tbl.order()) return false;
  for (const Quad& q : d.relations())
    if (c[q.w] != tbl(c[q.x], c[q.y], c[q.z])) return false;
  return true;
}

namespace {

constexpr Element kUncolored = ~Element{0};

class ColoringSearch {
 public:
  ColoringSearch(const Diagram& d, const TernTable& tbl)
      : tbl_(tbl), relations_(d.relations()), touching_(d.region_count()),
        colors_(d.region_count(), kUncolored) {
    for (std::size_t k = 0; k < relations_.size(); ++k) {
      const Quad& q = relations_[k];
      for (std::size_t r : {q.x, q.y, q.z, q.w}) touching_[r].push_back(k);
    }
    const std::size_t n = tbl.order();
    if (is_ternary_quasigroup(tbl).passed) {
      // solve_[slot][(p*n + r)*n + value] = the input in `slot` giving `value`.
      for (int slot = 0; slot < 3; ++slot) {
        solve_[slot].assign(n * n * n, 0);
        for (Element p = 0; p < n; ++p)
          for (Element r = 0; r < n; ++r)
            for (Element u = 0; u < n; ++u) {
              const Element v = slot == 0 ? tbl(u, p, r) : slot == 1 ? tbl(p, u, r) : tbl(p, r, u);
              solve_[slot][(p * n + r) * n + v] = u;
            }
      }
      invertible_ = true;
    }
  }

  std::vector<Coloring> run_from(std::size_t first_color) {
    found_.clear();
    if (colors_.empty()) {
      if (first_color == 0 && consistent_all()) found_.push_back(colors_);
      return found_;
    }
    const std::size_t mark = trail_.size();
    if (assign(0, static_cast<Element>(first_color))) descend(1);
    undo_to(mark);
    return found_;
  }

  std::vector<Coloring> run_all() {
    std::vector<Coloring> all;
    if (colors_.empty()) return run_from(0);
    for (std::size_t c = 0; c < tbl_.order(); ++c) {
      auto part = run_from(c);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }

 private:
  bool consistent_all() const {
    for (const Quad& q : relations_)
      if (colors_[q.w] != tbl_(colors_[q.x], colors_[q.y], colors_[q.z])) return false;
    return true;
  }

  // Assigns and propagates; false on contradiction (caller undoes the trail).
  bool assign(std::size_t region, Element color) {
    std::vector<std::pair<std::size_t, Element>> queue{{region, color}};
    while (!queue.empty()) {
      auto [r, c] = queue.back();
      queue.pop_back();
      if (colors_[r] != kUncolored) {
        if (colors_[r] != c) return false;
        continue;
      }
      colors_[r] = c;
      trail_.push_back(r);
      for (std::size_t k : touching_[r]) {
        if (!check_relation(relations_[k], queue)) return false;
      }
    }
    return true;
  }

  bool check_relation(const Quad& q, std::vector<std::pair<std::size_t, Element>>& queue) const {
    const Element x = colors_[q.x], y = colors_[q.y], z = colors_[q.z], w = colors_[q.w];
    const bool hx = x != kUncolored, hy = y != kUncolored, hz = z != kUncolored,
               hw = w != kUncolored;
    if (hx && hy && hz) {
      const Element value = tbl_(x, y, z);
      if (hw) return w == value;
      queue.emplace_back(q.w, value);
      return true;
    }
    if (!invertible_ || !hw) return true;
    const std::size_t n = tbl_.order();
    if (!hx && hy && hz) queue.emplace_back(q.x, solve_[0][(y * n + z) * n + w]);
    if (hx && !hy && hz) queue.emplace_back(q.y, solve_[1][(x * n + z) * n + w]);
    if (hx && hy && !hz) queue.emplace_back(q.z, solve_[2][(x * n + y) * n + w]);
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      colors_[trail_.back()] = kUncolored;
      trail_.pop_back();
    }
  }

  void descend(std::size_t from) {
    std::size_t r = from;
    while (r < colors_.size() && colors_[r] != kUncolored) ++r;
    if (r == colors_.size()) {
      if (consistent_all()) found_.push_back(colors_);
      return;
    }
    for (Element c = 0; c < tbl_.order(); ++c) {
      const std::size_t mark = trail_.size();
      if (assign(r, c)) descend(r + 1);
      undo_to(mark);
    }
  }

  const TernTable& tbl_;
  std::vector<Quad> relations_;
  std::vector<std::vector<std::size_t>> touching_;
  Coloring colors_;
  std::vector<std::size_t> trail_;
  std::array<std::vector<Element>, 3> solve_;
  bool invertible_ = false;
  std::vector<Coloring> found_;
};

}  // namespace

std::vector<Coloring> enumerate_colorings(const Diagram& d, const TernTable& tbl,
                                          std::size_t threads) {
  if (d.region_count() == 0 || threads <= 1) return ColoringSearch(d, tbl).run_all();
  std::vector<std::vector<Coloring>> parts(tbl.order());
  parallel_for(tbl.order(), threads,
               [&](std::size_t c) { parts[c] = ColoringSearch(d, tbl).run_from(c); });
  std::vector<Coloring> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return all;
}

ChainVector extract_cycle(const Diagram& d, const TernTable& tbl, const Coloring& c) {
  if (!is_coloring(d, tbl, c)) throw InputError("extract_cycle needs a valid coloring");
  if (d.dimension == 1) {
    ChainVector z(1);
    for (const auto& x : d.crossings) {
      const auto [r1, r2, r3] = x.ascending;
      z.add(TupleGen{c[r1], c[r2], c[r3]}, x.sign);
    }
    return z;
  }
  ChainVector z(2);
  for (const auto& t : d.triple_points) {
    const auto [r0, r1, r2, r3] = t.ascending;
    z.add(TupleGen{c[r0], c[r1], c[r2], c[r3]}, t.sign);
  }
  return z;
}

CycleCheck verify_cycle(const Diagram& d, const TernTable& tbl, const ChainVector& z) {
  if (z.degree() != d.dimension && !z.is_zero()) {
    std::ostringstream msg;
    msg << "a dimension-" << d.dimension << " diagram carries chains of degree " << d.dimension
        << ", got degree " << z.degree();
    throw InputError(msg.str());
  }
  CycleCheck out;
  out.boundary = project_nondegenerate(boundary(tbl, Differential::Full, z));
  out.passed = out.boundary.is_zero();
  return out;
}

}  // namespace ternlab
