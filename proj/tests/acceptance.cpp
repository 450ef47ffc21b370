// One line per acceptance criterion; exit status is nonzero if any fails.
// Usage: acceptance [--seed N]

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "oracles/brute.hpp"
#include "oracles/expansions.hpp"
#include "oracles/integer_linear.hpp"
#include "ternlab/diagram.hpp"
#include "ternlab/homology.hpp"
#include "ternlab/invariants.hpp"
#include "ternlab/json_io.hpp"
#include "ternlab/smith.hpp"

using namespace ternlab;

namespace {

std::uint64_t g_seed = 20240611;

struct Outcome {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (!ok && failures.size() < 5) failures.push_back(what());
    if (!ok && failures.size() == 5) failures.push_back("...");
  }
};

std::string show(const TupleGen& t) { return to_string(t); }

std::vector<TupleGen> all_tuples(std::size_t q, std::size_t len) {
  std::vector<TupleGen> out;
  std::vector<Element> x(len, 0);
  while (true) {
    out.emplace_back(x);
    std::size_t i = len;
    while (i > 0 && ++x[i - 1] == q) x[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

std::string data(const std::string& name) {
  return read_text_file(std::filesystem::path(TERNLAB_TEST_DATA_DIR) / name);
}

ChainVector trefoil_cycle() {
  ChainVector z(1);
  z.add({0, 1, 2}, 1);
  z.add({0, 2, 2}, 1);
  z.add({0, 0, 2}, 1);
  return z;
}

// ---------------------------------------------------------------------------

Outcome axiom_suite() {
  Outcome o;
  for (std::size_t n = 1; n <= 12; ++n) {
    const TernTable t = make_affine(n);
    o.expect(check_axioms(t).all_passed() && oracle::is_tern(t), [n] { return "R_" + std::to_string(n) + " axioms"; });
    o.expect(is_ternary_quasigroup(t).passed && oracle::latin_cube(t),
             [n] { return "R_" + std::to_string(n) + " quasigroup"; });
  }
  for (const GroupTable& g : {GroupTable::cyclic(6), GroupTable::symmetric(3)}) {
    const TernTable t = make_group_tern(g, GroupTernVariant::XZinvY);
    o.expect(check_axioms(t).all_passed() && oracle::is_tern(t), [] { return "xz^-1y tern axioms"; });
  }
  const GroupTable s3 = GroupTable::symmetric(3);
  const TernTable left = make_group_tern(s3, GroupTernVariant::AinvBC);
  const TernTable right = make_group_tern(s3, GroupTernVariant::ABCinv);
  const AxiomStatus l3l = check_axiom(left, Axiom::A3L), r3r = check_axiom(right, Axiom::A3R);
  o.expect(check_axiom(left, Axiom::A3R).passed && !oracle::a3r_failure(left), [] { return "a^-1bc A3R"; });
  o.expect(!l3l.passed && witness_refutes(left, Axiom::A3L, l3l.witness) && oracle::a3l_failure(left) &&
               l3l.witness == *oracle::a3l_failure(left),
           [] { return "a^-1bc A3L witness"; });
  o.expect(check_axiom(right, Axiom::A3L).passed && !oracle::a3l_failure(right), [] { return "abc^-1 A3L"; });
  o.expect(!r3r.passed && witness_refutes(right, Axiom::A3R, r3r.witness) && oracle::a3r_failure(right) &&
               r3r.witness == *oracle::a3r_failure(right),
           [] { return "abc^-1 A3R witness"; });
  return o;
}

// Face-level identities on one generator.
void identities(Outcome& o, const TernTable& t, const TernTable& th, const TupleGen& x) {
  const int n = x.degree();
  auto f = [&](FaceSide s, int i, const TupleGen& y) { return face(t, s, static_cast<std::size_t>(i), y); };
  for (int j = 1; j <= n; ++j)
    for (int i = 0; i < j; ++i) {
      // Same side (presimplicial) and mixed sides (commutation lemmas); the
      // four together are the precubical relations.
      for (FaceSide e : {FaceSide::L, FaceSide::R})
        for (FaceSide d : {FaceSide::L, FaceSide::R})
          o.expect(f(e, i, f(d, j, x)) == f(d, j - 1, f(e, i, x)), [&] {
            std::ostringstream m;
            m << "face identity i=" << i << " j=" << j << " at " << show(x);
            return m.str();
          });
      const ChainVector lhs = apply_face_combined(t, i, face_combined(t, j, x));
      const ChainVector rhs = apply_face_combined(t, j - 1, face_combined(t, i, x));
      o.expect(lhs == rhs, [&] { return "combined presimplicial at " + show(x); });
    }
  for (int i = 0; i <= n; ++i)
    o.expect(face_R(t, i, x) == reverse(face_L(th, n - i, reverse(x))),
             [&] { return "conversion identity at " + show(x); });
  for (auto v : {Differential::L, Differential::R, Differential::Full})
    o.expect(boundary(t, v, boundary(t, v, x)).is_zero(),
             [&] { return std::string("dd=0 ") + std::string(differential_name(v)) + " at " + show(x); });
  const ChainVector conv = reverse(boundary(th, Differential::L, reverse(x)));
  o.expect(boundary(t, Differential::R, x) == (n % 2 == 0 ? conv : -conv),
           [&] { return "reversed boundary at " + show(x); });
}

Outcome identity_suite() {
  Outcome o;
  std::vector<TernTable> tables = enumerate_terns(2, false);
  for (auto& t : enumerate_terns(3, false)) tables.push_back(t);
  for (const auto& t : tables) {
    const TernTable th = hat(t);
    for (std::size_t len = 3; len <= 6; ++len)
      for (const auto& x : all_tuples(t.order(), len)) identities(o, t, th, x);
  }
  std::mt19937_64 rng(g_seed);
  for (const GroupTable& g : {GroupTable::symmetric(3), GroupTable::cyclic(6)}) {
    const TernTable t = make_group_tern(g, GroupTernVariant::XZinvY);
    const TernTable th = hat(t);
    for (int s = 0; s < 10000; ++s) {
      std::vector<Element> x(3 + rng() % 4);
      for (auto& v : x) v = static_cast<Element>(rng() % 6);
      identities(o, t, th, TupleGen(x));
    }
  }
  return o;
}

Outcome degeneracy_closure() {
  Outcome o;
  for (std::size_t q : {3, 4}) {
    const TernTable t = make_affine(q);
    for (std::size_t len = 3; len <= 5; ++len)
      for (const auto& x : all_tuples(q, len)) {
        if (!is_degenerate(x)) continue;
        for (auto v : {Differential::L, Differential::R, Differential::Full})
          o.expect(project_nondegenerate(boundary(t, v, x)).is_zero(),
                   [&] { return "boundary leaves the degenerate span at " + show(x); });
      }
  }
  return o;
}

ChainVector as_chain(const oracle::Combination& c, int degree) {
  ChainVector out(degree);
  for (const auto& [t, k] : c) out.add(TupleGen(t), k);
  return out;
}

Outcome expansions() {
  Outcome o;
  for (const auto& t : {make_affine(3), make_group_tern(GroupTable::symmetric(3), GroupTernVariant::XZinvY)}) {
    for (std::size_t len = 3; len <= 5; ++len)
      for (const auto& x : all_tuples(t.order(), len)) {
        const std::vector<Element> v(x.coords().begin(), x.coords().end());
        const oracle::Combination written = len == 3   ? oracle::boundary1(t, v)
                                            : len == 4 ? oracle::boundary2(t, v)
                                                       : oracle::boundary3(t, v);
        o.expect(boundary(t, Differential::Full, x) == as_chain(written, x.degree() - 1),
                 [&] { return "expansion mismatch at " + show(x); });
      }
  }
  return o;
}

Outcome flagship() {
  Outcome o;
  const TernTable r3 = make_affine(3);
  const HomologyGroup h1 = homology(r3, 1, kTernHomology);
  bool z3 = false;
  for (const auto& d : h1.torsion) z3 = z3 || d % 3 == 0;
  o.expect(z3, [&] { return "H_1 = " + h1.to_string(); });
  const ChainVector z = trefoil_cycle();
  const Diagram trefoil = parse_diagram(data("trefoil.json"));
  o.expect(verify_cycle(trefoil, r3, z).passed, [] { return "trefoil chain is not a cycle"; });
  const CycleClass cls = cycle_class(r3, kTernHomology, z);
  o.expect(cls.kind == CycleClass::Kind::Finite && cls.order == 3,
           [&] { return "class order " + cls.order.get_str(); });
  return o;
}

Outcome coloring_oracle() {
  Outcome o;
  const Diagram trefoil = parse_diagram(data("trefoil.json"));
  const TernTable r3 = make_affine(3);
  const auto n = enumerate_colorings(trefoil, r3).size();
  const auto brute = oracle::count_colorings(trefoil, r3);
  o.expect(n == 27 && brute == 27, [&] { return "count " + std::to_string(n) + ", brute " + std::to_string(brute); });
  o.expect(enumerate_colorings(trefoil, make_affine(1)).size() == 1, [] { return "one-element tern"; });
  return o;
}

Outcome cocycle_reproduction() {
  Outcome o;
  const TernTable r3 = make_affine(3);
  const Cochain phi = parse_cochain(data("r3_cocycle.json"), 3);
  o.expect(check_cocycle(r3, phi).passed, [] { return "cocycle check"; });
  // Direct six-term evaluation.
  bool six = true;
  for (Element a = 0; a < 3; ++a)
    for (Element b = 0; b < 3; ++b) {
      six = six && phi(std::vector<Element>{a, b, a}) == 0;
      for (Element c = 0; c < 3; ++c)
        for (Element d = 0; d < 3; ++d) {
          long acc = 0;
          for (const auto& [t, k] : oracle::boundary2(r3, {a, b, c, d})) acc += k * static_cast<long>(phi(t));
          six = six && ((acc % 3) + 3) % 3 == 0;
        }
    }
  o.expect(six, [] { return "six-term oracle"; });
  const auto value = pair(phi, trefoil_cycle());
  o.expect(value == 1, [&] { return "pairing " + std::to_string(value); });
  const GroupRingElement s = state_sum(parse_diagram(data("trefoil.json")), r3, phi);
  o.expect(s.total() == 27, [&] { return "total " + std::to_string(s.total()); });
  o.expect(s.multiplicity == std::vector<std::uint64_t>{9, 18, 0}, [&] { return "distribution " + s.to_string(); });
  return o;
}

Outcome homology_sanity() {
  Outcome o;
  const TernTable one = make_affine(1);
  const auto full = homology_range(one, 4, {Differential::Full, Subcomplex::Full});
  for (std::size_t i = 0; i < full.size(); ++i)
    o.expect(full[i] == HomologyGroup{1, {}}, [&] { return "one-element full H_" + std::to_string(int(i) - 1); });
  const auto norm = homology_range(one, 4, kTernHomology);
  for (std::size_t i = 2; i < norm.size(); ++i)
    o.expect(norm[i].is_zero(), [&] { return "one-element normalized H_" + std::to_string(int(i) - 1); });

  for (std::size_t q : {2, 3}) {
    const TernTable t = make_affine(q);
    for (auto v : {Differential::L, Differential::R, Differential::Full})
      for (auto s : {Subcomplex::Full, Subcomplex::Degenerate, Subcomplex::Normalized})
        for (int n = 1; n <= 3; ++n) {
          const ComplexSelector sel{v, s};
          const auto prod = multiply(build_matrix(t, n - 1, sel).matrix, build_matrix(t, n, sel).matrix);
          o.expect(prod.nonzeros() == 0, [&] { return "matrix dd != 0, q=" + std::to_string(q); });
        }
  }

  std::mt19937_64 rng(g_seed + 8);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + rng() % 10, c = 1 + rng() % 10;
    DenseMatrix m(r, std::vector<Integer>(c, 0));
    for (auto& row : m)
      for (auto& v : row)
        if (rng() % 2) v = static_cast<long>(rng() % 41) - 20;
    const SmithForm s = SmithForm::compute(SparseMatrix::from_dense(m), true);
    const DenseMatrix u = s.row_transform(), v = s.col_transform();
    DenseMatrix d(r, std::vector<Integer>(c, 0));
    for (std::size_t i = 0; i < s.rank(); ++i) d[i][i] = s.divisors()[i];
    bool chain = true;
    for (std::size_t i = 1; i < s.rank(); ++i) chain = chain && s.divisors()[i] % s.divisors()[i - 1] == 0;
    o.expect(multiply(multiply(u, m), v) == d && chain && abs(oracle::bareiss_det(u)) == 1 &&
                 abs(oracle::bareiss_det(v)) == 1,
             [&] { return "Smith witness " + std::to_string(trial); });
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg.rfind("--seed=", 0) == 0) g_seed = std::strtoull(arg.c_str() + 7, nullptr, 10);
    else if (arg == "--seed" && i + 1 < argc) g_seed = std::strtoull(argv[++i], nullptr, 10);
  }
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0 = no limit
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "axiom suite", 10, axiom_suite},
      {2, "identity suite", 120, identity_suite},
      {3, "degeneracy closure", 0, degeneracy_closure},
      {4, "low-degree expansions", 0, expansions},
      {5, "trefoil class in H_1", 30, flagship},
      {6, "coloring oracle", 0, coloring_oracle},
      {7, "cocycle and state sum", 0, cocycle_reproduction},
      {8, "homology sanity", 0, homology_sanity},
  };
  std::cout << "seed " << g_seed << "\n";
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs > c.limit_s) {
      std::ostringstream m;
      m << "time limit " << c.limit_s << " s exceeded";
      o.failures.push_back(m.str());
    }
    const bool pass = o.failures.empty();
    failed += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << c.id << " (" << c.name << "): " << o.checks
              << " checks, " << std::fixed << std::setprecision(2) << secs << " s\n";
    for (const auto& f : o.failures) std::cout << "      " << f << "\n";
  }
  return failed == 0 ? 0 : 1;
}
