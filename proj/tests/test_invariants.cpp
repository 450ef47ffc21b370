#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "oracles/expansions.hpp"
#include "seed.hpp"
#include "ternlab/errors.hpp"
#include "ternlab/json_io.hpp"

using namespace ternlab;

namespace {

std::string data(const std::string& name) {
  return read_text_file(std::filesystem::path(TERNLAB_TEST_DATA_DIR) / name);
}

// Both cocycle conditions evaluated from the written six-term identity.
bool six_term_cocycle(const TernTable& T, const Cochain& f) {
  const auto q = static_cast<Element>(T.order());
  const auto m = static_cast<long>(f.modulus());
  for (Element a = 0; a < q; ++a)
    for (Element b = 0; b < q; ++b)
      if (f(std::vector<Element>{a, b, a}) != 0) return false;
  for (Element a = 0; a < q; ++a)
    for (Element b = 0; b < q; ++b)
      for (Element c = 0; c < q; ++c)
        for (Element d = 0; d < q; ++d) {
          long acc = 0;
          for (const auto& [t, k] : oracle::boundary2(T, {a, b, c, d}))
            acc += k * static_cast<long>(f(t));
          if (((acc % m) + m) % m != 0) return false;
        }
  return true;
}

Cochain r3_cocycle() { return parse_cochain(data("r3_cocycle.json"), 3); }

ChainVector trefoil_cycle() {
  ChainVector z(1);
  z.add({0, 1, 2}, 1);
  z.add({0, 2, 2}, 1);
  z.add({0, 0, 2}, 1);
  return z;
}

}  // namespace

TEST(Cochain, StorageAndJson) {
  Cochain f(3, 3, 5);
  f.set(std::vector<Element>{0, 1, 2}, -1);
  EXPECT_EQ(f(TupleGen{0, 1, 2}), 4u);
  EXPECT_EQ(f.tuple_at(f.index_of(std::vector<Element>{2, 0, 1})), (TupleGen{2, 0, 1}));
  EXPECT_EQ(parse_cochain(cochain_to_json(f).dump(), 3), f);
  EXPECT_THROW(Cochain(3, 3, 1), InputError);
  EXPECT_THROW(f(std::vector<Element>{0, 1}), InputError);
  EXPECT_THROW(parse_cochain(R"({"modulus": 3, "terms": [{"triple": [0,1,2], "value": 1},
                                  {"triple": [0,1,2], "value": 2}]})", 3),
               InputError);
  EXPECT_THROW(parse_cochain(R"({"modulus": 3, "terms": [{"triple": [0,1,3], "value": 1}]})", 3),
               InputError);
}

TEST(Cocycle, PaperCochainPasses) {
  const TernTable r3 = make_affine(3);
  const Cochain phi = r3_cocycle();
  EXPECT_TRUE(check_cocycle(r3, phi).passed);
  EXPECT_TRUE(six_term_cocycle(r3, phi));
}

TEST(Cocycle, FailuresReportTheCondition) {
  const TernTable r3 = make_affine(3);
  Cochain f(3, 3, 3);
  EXPECT_TRUE(check_cocycle(r3, f).passed);
  f.set(std::vector<Element>{0, 0, 0}, 1);
  const CocycleCheck c = check_cocycle(r3, f);
  EXPECT_FALSE(c.passed);
  EXPECT_EQ(c.failed, CocycleCheck::Condition::Degeneracy);

  Cochain g(3, 3, 3);
  g.set(std::vector<Element>{0, 1, 2}, 1);
  const CocycleCheck d = check_cocycle(r3, g);
  ASSERT_FALSE(d.passed);
  EXPECT_EQ(d.failed, CocycleCheck::Condition::Closure);
  EXPECT_EQ(d.witness.size(), 4u);
  EXPECT_FALSE(six_term_cocycle(r3, g));
}

TEST(Cocycle, AgreesWithSixTermOracle) {
  std::mt19937_64 rng(testing_support::seed());
  const TernTable r3 = make_affine(3);
  const CocycleSpace space = cocycle_space(r3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    Cochain f(3, 3, 3);
    if (trial % 2 == 0) {
      // Random combination of cocycles, sometimes with one cell disturbed.
      for (const auto& g : space.cocycles) {
        const auto k = rng() % 3;
        for (std::size_t i = 0; i < f.values().size(); ++i)
          f.set_index(i, f.values()[i] + k * g.values()[i]);
      }
      if (trial % 4 == 0) f.set_index(rng() % 27, rng() % 3);
    } else {
      for (std::size_t i = 0; i < f.values().size(); ++i) f.set_index(i, rng() % 3);
    }
    EXPECT_EQ(check_cocycle(r3, f).passed, six_term_cocycle(r3, f)) << "trial " << trial;
  }
}

TEST(Coboundary, MatchesFourTermFormula) {
  const TernTable r3 = make_affine(3);
  Cochain g(3, 2, 3);
  g.set(std::vector<Element>{0, 1}, 1);
  const Cochain dg = coboundary(r3, g);
  for (std::size_t i = 0; i < dg.values().size(); ++i) {
    const TupleGen t = dg.tuple_at(i);
    long acc = 0;
    for (const auto& [s, k] : oracle::boundary1(r3, {t[0], t[1], t[2]})) acc += k * static_cast<long>(g(s));
    EXPECT_EQ(dg.values()[i], static_cast<std::uint64_t>(((acc % 3) + 3) % 3)) << t;
  }
  EXPECT_TRUE(coboundary(r3, Cochain(3, 2, 3)).is_zero());
}

TEST(CocycleSpace, GeneratorsAreCocyclesAndPaperCochainIsInSpan) {
  const TernTable r3 = make_affine(3);
  const CocycleSpace space = cocycle_space(r3, 3);
  ASSERT_FALSE(space.cocycles.empty());
  for (const auto& f : space.cocycles) EXPECT_TRUE(six_term_cocycle(r3, f));
  for (std::size_t i = 0; i < space.coboundaries.size(); ++i) {
    EXPECT_EQ(space.coboundaries[i], coboundary(r3, space.sources[i]));
    EXPECT_TRUE(in_span(space.cocycles, space.coboundaries[i]));
  }
  const Cochain phi = r3_cocycle();
  EXPECT_TRUE(in_span(space.cocycles, phi));
  // Pairs nontrivially with a cycle, so it is not a coboundary.
  EXPECT_FALSE(in_span(space.coboundaries, phi));
}

TEST(CocycleSpace, CompositeModulusAndTrivialTern) {
  EXPECT_TRUE(cocycle_space(make_affine(1), 2).cocycles.empty());
  const TernTable r3 = make_affine(3);
  for (const auto& f : cocycle_space(r3, 6).cocycles) EXPECT_TRUE(six_term_cocycle(r3, f));
  EXPECT_THROW(cocycle_space(TernTable(2, std::vector<Element>(8, 0)), 2), PreconditionError);
}

TEST(Pairing, Values) {
  const Cochain phi = r3_cocycle();
  EXPECT_EQ(pair(phi, trefoil_cycle()), 1u);
  EXPECT_EQ(pair(Cochain(3, 3, 3), trefoil_cycle()), 0u);
  const TernTable r3 = make_affine(3);
  ChainVector c(2);
  c.add({0, 1, 2, 0}, 1);
  c.add({2, 2, 1, 0}, -2);
  EXPECT_EQ(pair(phi, boundary(r3, Differential::Full, c)), 0u);
  EXPECT_THROW(pair(phi, ChainVector(TupleGen{0, 1})), InputError);
}

TEST(StateSum, Trefoil) {
  const TernTable r3 = make_affine(3);
  const Diagram d = parse_diagram(data("trefoil.json"));
  const GroupRingElement s = state_sum(d, r3, r3_cocycle());
  EXPECT_EQ(s.total(), 27u);
  // Frozen regression value, cross-checked outside this suite.
  EXPECT_EQ(s.multiplicity, (std::vector<std::uint64_t>{9, 18, 0}));
  EXPECT_EQ(s.to_string(), "9 + 18t");
  EXPECT_EQ(state_sum(d, r3, r3_cocycle(), 3), s);
}

TEST(StateSum, TrivialCases) {
  const TernTable r3 = make_affine(3);
  const Diagram d = parse_diagram(data("trefoil.json"));
  EXPECT_EQ(state_sum(d, r3, Cochain(3, 3, 3)).multiplicity, (std::vector<std::uint64_t>{27, 0, 0}));
  const Diagram empty = parse_diagram(data("unknot.json"));
  EXPECT_EQ(state_sum(empty, r3, r3_cocycle()).multiplicity, (std::vector<std::uint64_t>{9, 0, 0}));
  Cochain bad(3, 3, 3);
  bad.set(std::vector<Element>{0, 1, 2}, 1);
  EXPECT_THROW(state_sum(d, r3, bad), PreconditionError);
  EXPECT_THROW(state_sum(d, r3, Cochain(3, 4, 3)), InputError);
}

TEST(GroupRing, Rendering) {
  EXPECT_EQ((GroupRingElement{3, {0, 0, 0}}).to_string(), "0");
  EXPECT_EQ((GroupRingElement{3, {1, 1, 4}}).to_string(), "1 + t + 4t^2");
}
