#pragma once

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

#include "ternlab/homology.hpp"
#include "ternlab/invariants.hpp"
#include "ternlab/tern_table.hpp"

namespace ternlab {

/// Whole file as a string; InputError if it cannot be read.
std::string read_text_file(const std::filesystem::path& path);

/// {"order": q, "entries": [q^3 values, row-major in (a,b,c)]}
TernTable parse_tern_table(std::string_view text);
nlohmann::json tern_table_to_json(const TernTable& tbl);

/// {"order": g, "product": [g^2 values, row-major in (x,y)]}
GroupTable parse_group_table(std::string_view text);
nlohmann::json group_table_to_json(const GroupTable& g);

/// {"modulus": m, "terms": [{"triple": [a,b,c], "value": v}, ...]}; unlisted
/// tuples map to 0. Arity-4 cochains use "tuple" with four entries.
Cochain parse_cochain(std::string_view text, std::size_t order);
nlohmann::json cochain_to_json(const Cochain& f);

nlohmann::json homology_to_json(const HomologyGroup& h);
nlohmann::json chain_to_json(const ChainVector& c);
nlohmann::json group_ring_to_json(const GroupRingElement& g);

}  // namespace ternlab
