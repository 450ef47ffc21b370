#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "ternlab/diagram.hpp"
#include "ternlab/errors.hpp"
#include "ternlab/homology.hpp"
#include "ternlab/invariants.hpp"
#include "ternlab/json_io.hpp"
#include "ternlab/tern_table.hpp"

#ifndef TERNLAB_DATA_DIR
#define TERNLAB_DATA_DIR "data"
#endif

namespace ternlab::cli {
namespace {

using nlohmann::json;

// FNV-1a over the input files, in argument order.
class Digest {
 public:
  void add(std::string_view bytes) {
    for (unsigned char ch : bytes) {
      hash_ ^= ch;
      hash_ *= 0x100000001b3ULL;
    }
    // Separator so that ("ab","c") and ("a","bc") differ.
    hash_ ^= 0xff;
    hash_ *= 0x100000001b3ULL;
  }
  std::string hex() const {
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << hash_;
    return os.str();
  }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json_output = false;
  bool timing = false;
  std::size_t threads = 1;
  Digest digest;

  std::string load(const std::string& path) {
    std::string text = read_text_file(path);
    digest.add(text);
    return text;
  }

  EngineConfig engine() const {
    EngineConfig config = EngineConfig::from_env();
    config.threads = threads;
    return config;
  }
};

std::vector<Element> element_list(const std::string& csv) {
  std::vector<Element> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("expected a comma-separated list of elements, got '" + csv + "'");
    out.push_back(static_cast<Element>(std::stoul(item)));
  }
  if (out.empty()) throw InputError("empty element list");
  return out;
}

json tuple_json(std::span<const Element> t) { return std::vector<Element>(t.begin(), t.end()); }

json status_json(const AxiomStatus& s) {
  json j{{"axiom", axiom_name(s.axiom)}, {"passed", s.passed}};
  if (!s.passed) j["witness"] = s.witness;
  return j;
}

std::string status_text(const AxiomStatus& s) {
  std::ostringstream os;
  os << std::left << std::setw(11) << axiom_name(s.axiom) << (s.passed ? "pass" : "FAIL");
  if (!s.passed) {
    os << "  witness (";
    for (std::size_t i = 0; i < s.witness.size(); ++i) os << (i ? "," : "") << s.witness[i];
    os << ")";
  }
  return os.str();
}

json coloring_json(const Diagram& d, const Coloring& c) {
  json j = json::object();
  for (std::size_t r = 0; r < c.size(); ++r) j[d.region_names[r]] = c[r];
  return j;
}

std::string coloring_text(const Diagram& d, const Coloring& c) {
  std::ostringstream os;
  for (std::size_t r = 0; r < c.size(); ++r)
    os << (r ? " " : "") << d.region_names[r] << "=" << c[r];
  return os.str();
}

std::string class_order_text(const CycleClass& cls) {
  switch (cls.kind) {
    case CycleClass::Kind::NotACycle: return "not a cycle";
    case CycleClass::Kind::Infinite: return "infinite";
    case CycleClass::Kind::Finite: return cls.order.get_str();
  }
  return "?";
}

json class_order_json(const CycleClass& cls) {
  switch (cls.kind) {
    case CycleClass::Kind::NotACycle: return json{{"cycle", false}, {"boundary", chain_to_json(*cls.boundary)}};
    case CycleClass::Kind::Infinite: return json{{"cycle", true}, {"order", "infinite"}};
    case CycleClass::Kind::Finite: return json{{"cycle", true}, {"order", cls.order.get_ui()}};
  }
  return {};
}

void emit(Context& ctx, const std::string& subcommand, json result, const std::string& text,
          std::chrono::steady_clock::time_point start) {
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (ctx.json_output) {
    json report{{"subcommand", subcommand},
                {"inputs_digest", ctx.digest.hex()},
                {"result", std::move(result)}};
    if (ctx.timing) report["wall_time_ms"] = ms;
    ctx.out << report.dump(2) << "\n";
  } else {
    ctx.out << text;
    if (ctx.timing) ctx.out << "wall time: " << std::fixed << std::setprecision(1) << ms << " ms\n";
  }
}

// ---------------------------------------------------------------------------

int cmd_check(Context& ctx, const std::string& table_path, const std::string& axiom_csv) {
  const auto start = std::chrono::steady_clock::now();
  const TernTable tbl = parse_tern_table(ctx.load(table_path));
  std::vector<Axiom> axioms;
  if (axiom_csv.empty()) {
    axioms.assign(std::begin(kTernAxioms), std::end(kTernAxioms));
    axioms.push_back(Axiom::Quasigroup);
  } else {
    std::stringstream ss(axiom_csv);
    std::string name;
    while (std::getline(ss, name, ',')) axioms.push_back(parse_axiom(name));
  }
  const AxiomReport report = check_axioms(tbl, axioms);
  json statuses = json::array();
  std::ostringstream text;
  text << "order " << tbl.order() << "\n";
  for (const auto& s : report.statuses) {
    statuses.push_back(status_json(s));
    text << status_text(s) << "\n";
  }
  emit(ctx, "check", json{{"order", tbl.order()}, {"all_passed", report.all_passed()}, {"axioms", statuses}},
       text.str(), start);
  return report.all_passed() ? kSuccess : kCheckFailed;
}

int cmd_enumerate(Context& ctx, std::size_t order, bool quasigroup, std::size_t bound) {
  const auto start = std::chrono::steady_clock::now();
  const auto terns = enumerate_terns(order, quasigroup, bound);
  json tables = json::array();
  std::ostringstream text;
  text << terns.size() << " tern(s) of order " << order << " up to relabeling\n";
  for (const auto& t : terns) {
    tables.push_back(tern_table_to_json(t));
    text << "  [";
    for (std::size_t i = 0; i < t.entries().size(); ++i) text << (i ? "," : "") << t.entries()[i];
    text << "]\n";
  }
  emit(ctx, "enumerate",
       json{{"order", order}, {"quasigroup", quasigroup}, {"count", terns.size()}, {"tables", tables}},
       text.str(), start);
  return kSuccess;
}

int cmd_boundary(Context& ctx, const std::string& table_path, const std::string& variant,
                 const std::string& tuple_csv) {
  const auto start = std::chrono::steady_clock::now();
  const TernTable tbl = parse_tern_table(ctx.load(table_path));
  const TupleGen t(element_list(tuple_csv));
  t.require_order(tbl.order());
  const ChainVector b = boundary(tbl, parse_differential(variant), t);
  std::ostringstream text;
  text << "boundary_" << differential_name(parse_differential(variant)) << t << " = " << b << "\n";
  emit(ctx, "boundary",
       json{{"variant", variant}, {"tuple", tuple_json(t.coords())}, {"boundary", chain_to_json(b)}},
       text.str(), start);
  return kSuccess;
}

int cmd_homology(Context& ctx, const std::string& table_path, const std::string& variant,
                 const std::string& subcomplex, int max_degree) {
  const auto start = std::chrono::steady_clock::now();
  const TernTable tbl = parse_tern_table(ctx.load(table_path));
  const ComplexSelector sel{parse_differential(variant), parse_subcomplex(subcomplex)};
  const auto groups = homology_range(tbl, max_degree, sel, ctx.engine());
  json degrees = json::array();
  std::ostringstream text;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const int n = static_cast<int>(i) - 1;
    json h = homology_to_json(groups[i]);
    h["degree"] = n;
    degrees.push_back(h);
    text << "H_" << n << " = " << groups[i].to_string() << "\n";
  }
  emit(ctx, "homology",
       json{{"variant", variant}, {"subcomplex", subcomplex}, {"max_degree", max_degree}, {"degrees", degrees}},
       text.str(), start);
  return kSuccess;
}

void warn_if_not_quasigroup(Context& ctx, const TernTable& tbl) {
  if (!is_ternary_quasigroup(tbl).passed)
    ctx.err << "warning: the table is not a ternary quasigroup; colorings are enumerated "
               "exhaustively and need not be invariant\n";
}

int cmd_color(Context& ctx, const std::string& diagram_path, const std::string& table_path,
              bool list) {
  const auto start = std::chrono::steady_clock::now();
  const Diagram d = parse_diagram(ctx.load(diagram_path));
  const TernTable tbl = parse_tern_table(ctx.load(table_path));
  warn_if_not_quasigroup(ctx, tbl);
  const auto colorings = enumerate_colorings(d, tbl, ctx.threads);
  json result{{"count", colorings.size()}};
  std::ostringstream text;
  text << colorings.size() << " coloring(s)\n";
  if (list) {
    json all = json::array();
    for (const auto& c : colorings) {
      all.push_back(coloring_json(d, c));
      text << "  " << coloring_text(d, c) << "\n";
    }
    result["colorings"] = all;
  }
  emit(ctx, "color", result, text.str(), start);
  return kSuccess;
}

int cmd_cycles(Context& ctx, const std::string& diagram_path, const std::string& table_path,
               bool with_class_order) {
  const auto start = std::chrono::steady_clock::now();
  const Diagram d = parse_diagram(ctx.load(diagram_path));
  const TernTable tbl = parse_tern_table(ctx.load(table_path));
  warn_if_not_quasigroup(ctx, tbl);
  const auto colorings = enumerate_colorings(d, tbl, ctx.threads);
  json entries = json::array();
  std::ostringstream text;
  bool all_cycles = true;
  for (const auto& c : colorings) {
    const ChainVector z = extract_cycle(d, tbl, c);
    const CycleCheck check = verify_cycle(d, tbl, z);
    all_cycles = all_cycles && check.passed;
    json e{{"coloring", coloring_json(d, c)}, {"cycle", chain_to_json(z)}, {"is_cycle", check.passed}};
    text << coloring_text(d, c) << " : " << z << (check.passed ? "" : "  [NOT A CYCLE]");
    if (with_class_order && check.passed) {
      const CycleClass cls = cycle_class(tbl, kTernHomology, z, ctx.engine());
      e["class_order"] = class_order_json(cls)["order"];
      text << "  order " << class_order_text(cls);
    }
    text << "\n";
    entries.push_back(std::move(e));
  }
  emit(ctx, "cycles", json{{"count", colorings.size()}, {"all_cycles", all_cycles}, {"cycles", entries}},
       text.str(), start);
  return all_cycles ? kSuccess : kCheckFailed;
}

int cmd_cocycle_check(Context& ctx, const std::string& table_path, const std::string& cochain_path) {
  const auto start = std::chrono::steady_clock::now();
  const TernTable tbl = parse_tern_table(ctx.load(table_path));
  const Cochain f = parse_cochain(ctx.load(cochain_path), tbl.order());
  const CocycleCheck check = check_cocycle(tbl, f);
  json result{{"passed", check.passed}};
  std::ostringstream text;
  if (check.passed) {
    text << "cocycle: pass\n";
  } else {
    const char* which =
        check.failed == CocycleCheck::Condition::Degeneracy ? "degeneracy" : "closure";
    result["condition"] = which;
    result["witness"] = check.witness;
    result["value"] = check.value;
    text << "cocycle: FAIL (" << which << " condition at (";
    for (std::size_t i = 0; i < check.witness.size(); ++i) text << (i ? "," : "") << check.witness[i];
    text << "), value " << check.value << ")\n";
  }
  emit(ctx, "cocycle-check", result, text.str(), start);
  return check.passed ? kSuccess : kCheckFailed;
}

int cmd_state_sum(Context& ctx, const std::string& diagram_path, const std::string& table_path,
                  const std::string& cochain_path) {
  const auto start = std::chrono::steady_clock::now();
  const Diagram d = parse_diagram(ctx.load(diagram_path));
  const TernTable tbl = parse_tern_table(ctx.load(table_path));
  const Cochain f = parse_cochain(ctx.load(cochain_path), tbl.order());
  warn_if_not_quasigroup(ctx, tbl);
  const GroupRingElement sum = state_sum(d, tbl, f, ctx.threads);
  emit(ctx, "state-sum", group_ring_to_json(sum), "state sum: " + sum.to_string() + "\n", start);
  return kSuccess;
}

int cmd_reproduce_trefoil(Context& ctx, const std::string& data_dir) {
  const auto start = std::chrono::steady_clock::now();
  const std::filesystem::path dir(data_dir);
  const TernTable r3 = parse_tern_table(ctx.load((dir / "r3.json").string()));
  const Diagram trefoil = parse_diagram(ctx.load((dir / "trefoil.json").string()));
  const Cochain phi = parse_cochain(ctx.load((dir / "r3_cocycle.json").string()), r3.order());

  json steps = json::array();
  std::ostringstream text;
  bool ok = true;
  auto step = [&](const std::string& name, bool passed, json detail, const std::string& line) {
    ok = ok && passed;
    detail["step"] = name;
    detail["passed"] = passed;
    steps.push_back(std::move(detail));
    text << (passed ? "[ok]   " : "[FAIL] ") << line << "\n";
  };

  const AxiomReport axioms = check_axioms(r3);
  const bool quasigroup = is_ternary_quasigroup(r3).passed;
  step("tern_axioms", axioms.all_passed() && quasigroup, json{{"order", r3.order()}},
       "R3 satisfies A1, A2L, A2M, A2R, A3L, A3R and is a ternary quasigroup");

  const auto colorings = enumerate_colorings(trefoil, r3, ctx.threads);
  step("colorings", colorings.size() == 27, json{{"count", colorings.size()}},
       "trefoil has " + std::to_string(colorings.size()) + " colorings by R3");

  const auto a = *trefoil.region_index("A"), b = *trefoil.region_index("B"),
             c = *trefoil.region_index("C");
  auto it = std::find_if(colorings.begin(), colorings.end(),
                         [&](const Coloring& col) { return col[a] == 0 && col[b] == 1 && col[c] == 2; });
  if (it == colorings.end()) {
    step("cycle", false, json::object(), "no coloring with a=0, b=1, c=2");
  } else {
    const ChainVector z = extract_cycle(trefoil, r3, *it);
    ChainVector expected(1);
    expected.add(TupleGen{0, 1, 2}, 1);
    expected.add(TupleGen{0, 2, 2}, 1);
    expected.add(TupleGen{0, 0, 2}, 1);
    std::ostringstream zs;
    zs << z;
    step("cycle", z == expected, json{{"cycle", chain_to_json(z)}}, "cycle of coloring (0,1,2): " + zs.str());

    const CycleCheck check = verify_cycle(trefoil, r3, z);
    step("is_cycle", check.passed, json::object(), "it is a cycle modulo degenerate tuples");

    const CycleClass cls = cycle_class(r3, kTernHomology, z, ctx.engine());
    step("class_order", cls.kind == CycleClass::Kind::Finite && cls.order == 3, class_order_json(cls),
         "its class in H_1^T(R3) has order " + class_order_text(cls));

    const HomologyGroup h1 = homology(r3, 1, kTernHomology, ctx.engine());
    const bool has_z3 = std::any_of(h1.torsion.begin(), h1.torsion.end(),
                                    [](const Integer& t) { return t % 3 == 0; });
    step("homology", has_z3, homology_to_json(h1), "H_1^T(R3) = " + h1.to_string());

    const CocycleCheck cocycle = check_cocycle(r3, phi);
    step("cocycle", cocycle.passed, json::object(), "the characteristic-function cochain is a cocycle");

    const std::uint64_t value = pair(phi, z);
    step("pairing", value != 0, json{{"value", value}},
         "pairing with the cycle = " + std::to_string(value) + " (mod 3)");

    if (cocycle.passed) {
      const GroupRingElement sum = state_sum(trefoil, r3, phi, ctx.threads);
      step("state_sum", sum.total() == colorings.size(), group_ring_to_json(sum),
           "state sum = " + sum.to_string());
    }
  }
  emit(ctx, "reproduce-trefoil", json{{"passed", ok}, {"steps", steps}}, text.str(), start);
  return ok ? kSuccess : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ternlab: homology of terns and knot invariants from region colorings"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx{out, err, false, false, 1, {}};
  app.add_flag("--json", ctx.json_output, "Print a JSON report");
  app.add_flag("--timing", ctx.timing, "Include wall time in the report");
  app.add_option("--threads", ctx.threads, "Worker threads")->check(CLI::PositiveNumber);

  std::string table, diagram, cochain, axioms, variant = "full", subcomplex = "full", tuple;
  std::string data_dir = TERNLAB_DATA_DIR;
  std::size_t order = 0, bound = kDefaultEnumerationBound;
  int max_degree = 2;
  bool quasigroup = false, list = false, count = false, class_order = false;

  auto* check = app.add_subcommand("check", "Check tern axioms and the quasigroup property");
  check->add_option("table", table, "Tern table JSON")->required();
  check->add_option("--axioms", axioms, "Comma-separated subset, e.g. A1,A3L");

  auto* enumerate = app.add_subcommand("enumerate", "List terns of a given order up to relabeling");
  enumerate->add_option("--order", order, "Carrier size")->required();
  enumerate->add_flag("--quasigroup", quasigroup, "Prune and filter by the Latin-cube condition");
  enumerate->add_option("--bound", bound, "Largest order accepted");

  auto* bnd = app.add_subcommand("boundary", "Boundary of one generator");
  bnd->add_option("table", table)->required();
  bnd->add_option("--variant", variant, "L, R or full");
  bnd->add_option("--tuple", tuple, "Generator, e.g. 0,1,2")->required();

  auto* hom = app.add_subcommand("homology", "Homology groups by Smith normal form");
  hom->add_option("table", table)->required();
  hom->add_option("--variant", variant, "L, R or full");
  hom->add_option("--subcomplex", subcomplex, "full, degenerate or normalized");
  hom->add_option("--max-degree", max_degree, "Highest degree reported")->check(CLI::Range(-1, 64));

  auto* color = app.add_subcommand("color", "Enumerate colorings of a diagram");
  color->add_option("diagram", diagram)->required();
  color->add_option("table", table)->required();
  auto* list_flag = color->add_flag("--list", list, "List every coloring");
  color->add_flag("--count", count, "Only count colorings (default)")->excludes(list_flag);

  auto* cycles = app.add_subcommand("cycles", "Cycles of all colorings of a diagram");
  cycles->add_option("diagram", diagram)->required();
  cycles->add_option("table", table)->required();
  cycles->add_flag("--class-order", class_order, "Order of each class in tern homology");

  auto* cocheck = app.add_subcommand("cocycle-check", "Check the cocycle conditions");
  cocheck->add_option("table", table)->required();
  cocheck->add_option("cochain", cochain)->required();

  auto* ssum = app.add_subcommand("state-sum", "Cocycle state-sum invariant");
  ssum->add_option("diagram", diagram)->required();
  ssum->add_option("table", table)->required();
  ssum->add_option("cochain", cochain)->required();

  auto* repro = app.add_subcommand("reproduce-trefoil", "End-to-end trefoil computation over R3");
  repro->add_option("--data-dir", data_dir, "Directory with the bundled data files");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*check) return cmd_check(ctx, table, axioms);
    if (*enumerate) return cmd_enumerate(ctx, order, quasigroup, bound);
    if (*bnd) return cmd_boundary(ctx, table, variant, tuple);
    if (*hom) return cmd_homology(ctx, table, variant, subcomplex, max_degree);
    if (*color) return cmd_color(ctx, diagram, table, list);
    if (*cycles) return cmd_cycles(ctx, diagram, table, class_order);
    if (*cocheck) return cmd_cocycle_check(ctx, table, cochain);
    if (*ssum) return cmd_state_sum(ctx, diagram, table, cochain);
    if (*repro) return cmd_reproduce_trefoil(ctx, data_dir);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "precondition error: " << e.what() << "\n";
    return kInputError;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return kResourceError;
  }
  return kInputError;
}

}  // namespace ternlab::cli
