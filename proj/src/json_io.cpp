#include "ternlab/json_io.hpp"

#include <fstream>
#include <sstream>

#include "ternlab/errors.hpp"

namespace ternlab {

using nlohmann::json;

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

json parse_object(std::string_view text, const char* what) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed ") + what + " JSON: " + e.what());
  }
  if (!doc.is_object()) throw InputError(std::string(what) + " JSON must be an object");
  return doc;
}

std::size_t positive_field(const json& doc, const char* key, const char* what) {
  if (!doc.contains(key) || !doc.at(key).is_number_unsigned() || doc.at(key).get<std::size_t>() == 0)
    throw InputError(std::string(what) + " needs a positive integer '" + key + "'");
  return doc.at(key).get<std::size_t>();
}

std::vector<Element> element_array(const json& doc, const char* key, const char* what) {
  if (!doc.contains(key) || !doc.at(key).is_array())
    throw InputError(std::string(what) + " needs an array '" + key + "'");
  std::vector<Element> out;
  for (const auto& v : doc.at(key)) {
    if (!v.is_number_unsigned()) throw InputError(std::string(what) + " entries must be non-negative integers");
    out.push_back(v.get<Element>());
  }
  return out;
}

}  // namespace

TernTable parse_tern_table(std::string_view text) {
  const json doc = parse_object(text, "tern table");
  const std::size_t q = positive_field(doc, "order", "tern table");
  return TernTable(q, element_array(doc, "entries", "tern table"));
}

json tern_table_to_json(const TernTable& tbl) {
  return json{{"order", tbl.order()},
              {"entries", std::vector<Element>(tbl.entries().begin(), tbl.entries().end())}};
}

GroupTable parse_group_table(std::string_view text) {
  const json doc = parse_object(text, "group table");
  const std::size_t g = positive_field(doc, "order", "group table");
  return GroupTable(g, element_array(doc, "product", "group table"));
}

json group_table_to_json(const GroupTable& g) {
  return json{{"order", g.order()},
              {"product", std::vector<Element>(g.product().begin(), g.product().end())}};
}

Cochain parse_cochain(std::string_view text, std::size_t order) {
  const json doc = parse_object(text, "cochain");
  if (!doc.contains("modulus") || !doc.at("modulus").is_number_unsigned() ||
      doc.at("modulus").get<std::uint64_t>() < 2)
    throw InputError("cochain needs an integer 'modulus' >= 2");
  const auto m = doc.at("modulus").get<std::uint64_t>();
  if (!doc.contains("terms") || !doc.at("terms").is_array())
    throw InputError("cochain needs a 'terms' array");
  const json& terms = doc.at("terms");

  std::size_t arity = 3;
  if (doc.contains("arity")) {
    if (!doc.at("arity").is_number_unsigned()) throw InputError("cochain 'arity' must be an integer");
    arity = doc.at("arity").get<std::size_t>();
  } else if (!terms.empty()) {
    const json& first = terms.front();
    const char* key = first.contains("triple") ? "triple" : "tuple";
    if (first.contains(key) && first.at(key).is_array()) arity = first.at(key).size();
  }
  if (arity != 3 && arity != 4) throw InputError("cochain arity must be 3 or 4");

  Cochain f(order, arity, m);
  std::vector<bool> seen(f.values().size(), false);
  for (const auto& term : terms) {
    if (!term.is_object()) throw InputError("cochain terms must be objects");
    const char* key = term.contains("triple") ? "triple" : "tuple";
    if (!term.contains(key) || !term.at(key).is_array() || term.at(key).size() != arity)
      throw InputError("every cochain term needs a tuple of length " + std::to_string(arity));
    std::vector<Element> tuple;
    for (const auto& v : term.at(key)) {
      if (!v.is_number_unsigned() || v.get<std::size_t>() >= order)
        throw InputError("cochain tuple entries must lie in the carrier");
      tuple.push_back(v.get<Element>());
    }
    if (!term.contains("value") || !term.at("value").is_number_integer())
      throw InputError("every cochain term needs an integer 'value'");
    const std::size_t idx = f.index_of(tuple);
    if (seen[idx]) throw InputError("cochain lists a tuple twice");
    seen[idx] = true;
    f.set(tuple, term.at("value").get<std::int64_t>());
  }
  return f;
}

json cochain_to_json(const Cochain& f) {
  json terms = json::array();
  const char* key = f.arity() == 3 ? "triple" : "tuple";
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    if (f.values()[i] == 0) continue;
    const TupleGen t = f.tuple_at(i);
    terms.push_back(json{{key, std::vector<Element>(t.coords().begin(), t.coords().end())},
                         {"value", f.values()[i]}});
  }
  return json{{"modulus", f.modulus()}, {"arity", f.arity()}, {"terms", terms}};
}

json homology_to_json(const HomologyGroup& h) {
  json torsion = json::array();
  for (const auto& t : h.torsion) {
    // Torsion coefficients fit in 64 bits for any table this tool can build;
    // fall back to strings if they ever do not.
    if (t.fits_ulong_p())
      torsion.push_back(t.get_ui());
    else
      torsion.push_back(t.get_str());
  }
  return json{{"rank", h.rank}, {"torsion", torsion}};
}

json chain_to_json(const ChainVector& c) {
  json terms = json::array();
  for (const auto& [gen, coeff] : c.terms())
    terms.push_back(json{{"tuple", std::vector<Element>(gen.coords().begin(), gen.coords().end())},
                         {"coefficient", coeff}});
  return json{{"degree", c.degree()}, {"terms", terms}};
}

json group_ring_to_json(const GroupRingElement& g) {
  return json{{"modulus", g.modulus},
              {"multiplicities", g.multiplicity},
              {"total", g.total()},
              {"polynomial", g.to_string()}};
}

}  // namespace ternlab
