#include <doctest.h>

#include <cmath>
#include <random>

#include "exactq/boolfun.hpp"
#include "exactq/function_text.hpp"
#include "exactq/program.hpp"
#include "exactq/program_json.hpp"

using namespace exactq;

namespace {

TruthTable parityTable(unsigned n) {
  return TruthTable::fromPredicate(n, [](InputCode m) { return std::popcount(m) & 1; });
}

TruthTable naeTable(unsigned n) {
  return TruthTable::fromPredicate(n, [n](InputCode m) { return m != 0 && m + 1 != (InputCode{1} << n); });
}

TruthTable xorPair(unsigned n, Var i, Var j) {
  return TruthTable::fromPredicate(n, [=](InputCode m) { return ((m >> i) ^ (m >> j)) & 1u; });
}

}  // namespace

TEST_CASE("phase oracle") {
  std::vector<Complex> state{0.5, 0.5, 0.5, 0.5};
  const std::vector<std::optional<Var>> labels{0, 1, std::nullopt, 0};
  applyOracle(state, labels, 0b00);
  CHECK(state == std::vector<Complex>{0.5, 0.5, 0.5, 0.5});
  applyOracle(state, labels, 0b01);
  CHECK(state == std::vector<Complex>{-0.5, 0.5, 0.5, -0.5});

  std::vector<Complex> pair{M_SQRT1_2, M_SQRT1_2};
  applyOracle(pair, {0, 1}, 0b10);
  CHECK(pair[0] / pair[1] == Complex(-1.0));
}

TEST_CASE("scaled matrices") {
  const ScaledMatrix h{2, {1.0, 1.0, 1.0, -1.0}, 1};
  CHECK(h.isUnitary());
  CHECK(std::abs(h.at(1, 1) + M_SQRT1_2) < 1e-15);
  CHECK(h.adjoint() == h);
  const ScaledMatrix bad{2, {1.0, 1.0, 1.0, 1.0}, 1};
  CHECK_FALSE(bad.isUnitary());
}

TEST_CASE("xor gadget computes the xor of its pair exhaustively") {
  for (unsigned n = 2; n <= 5; ++n) {
    for (Var i = 0; i < n; ++i) {
      for (Var j = 0; j < n; ++j) {
        if (i == j) continue;
        const auto g = xorGadget(i, j, output(false), output(true));
        const auto r = simulate(g, xorPair(n, i, j));
        REQUIRE(r.exact);
        CHECK(r.queriesUsedWorstCase == 1);
        CHECK(r.worstWrongAmplitude < kEpsilon);
        CHECK(simulate(elaborate(xorQuery(i, j, output(false), output(true))), xorPair(n, i, j)).exact);
        CHECK(simulate(xorQuery(i, j, output(false), output(true)), xorPair(n, i, j)).exact);
      }
    }
  }
  const auto one = xorGadget(0, 1, output(true), output(true));
  const auto r = simulate(one, TruthTable::constant(2, true));
  CHECK(r.exact);
  CHECK(queryCost(one) == 1);
  CHECK_THROWS_AS(xorGadget(1, 1, output(false), output(true)), std::invalid_argument);
}

TEST_CASE("parity and NAE programs") {
  for (unsigned n = 1; n <= 10; ++n) {
    const auto p = parityProgram(n);
    const auto r = simulate(p, parityTable(n));
    CHECK(r.exact);
    CHECK(queryCost(p) == (n + 1) / 2);
    CHECK(r.queriesUsedWorstCase == (n + 1) / 2);
    if (n >= 2) {
      const auto q = naeProgram(n);
      const auto s = simulate(q, naeTable(n));
      CHECK(s.exact);
      CHECK(queryCost(q) == n - 1);
      CHECK(s.perInputOutcomes.front() == 0);
      CHECK(s.perInputOutcomes.back() == 0);
    }
  }
  CHECK(queryCost(parityProgram(2)) == 1);
  CHECK(queryCost(parityProgram(5)) == 3);
  CHECK(queryCost(naeProgram(3)) == 2);
}

TEST_CASE("classical AND chain") {
  const auto chain = andChain({0, 1, 2}, 0, false);
  const auto r = simulate(chain, TruthTable::fromPredicate(3, [](InputCode m) { return m == 7; }));
  CHECK(r.exact);
  CHECK(queryCost(chain) == 3);
  CHECK_FALSE(containsQuantum(chain));
}

TEST_CASE("agree-or block is exact for every literal pattern") {
  for (std::uint64_t neg = 0; neg < 8; ++neg) {
    for (bool invert : {false, true}) {
      const auto p = agreeOrProgram({0, 1, 2}, neg, invert);
      const auto f = TruthTable::fromPredicate(3, [&](InputCode m) {
        const bool a = ((m ^ neg) & 1u) != 0, b = ((m ^ neg) & 2u) != 0, c = ((m ^ neg) & 4u) != 0;
        return ((a == b) && (a || c)) != invert;
      });
      const auto r = simulate(p, f);
      CHECK(r.exact);
      CHECK(r.worstWrongAmplitude < kEpsilon);
      CHECK(queryCost(p) == 2);
    }
  }
}

TEST_CASE("a tampered program is reported inexact with its failing inputs") {
  const auto p = xorGadget(0, 1, output(true), output(false));
  const auto r = simulate(p, parityTable(2));
  CHECK_FALSE(r.exact);
  CHECK(r.failingInputs == std::vector<InputCode>{0, 1, 2, 3});

  UnitaryBlock block;
  block.dim = 2;
  block.labels = {Var{0}, Var{1}};
  block.unitaries = {ScaledMatrix{2, {1.0, 0.0, 0.0, 1.0}, 0}, ScaledMatrix{2, {1.0, 1.0, 1.0, -1.0}, 1}};
  block.outcomes = {output(false), output(true)};
  const auto half = simulate(unitaryBlock(block), parityTable(2));
  CHECK_FALSE(half.exact);
  CHECK(std::abs(half.worstWrongAmplitude - M_SQRT1_2) < 1e-12);
  CHECK(half.perInputOutcomes.front() == -1);
}

TEST_CASE("axiom leaves are not simulatable") {
  AxiomLeaf leaf;
  leaf.classId = "EXACT_3^2";
  leaf.arity = 3;
  leaf.vars = {0, 1, 2};
  leaf.table = axiomRow("EXACT_3^2")->representative;
  leaf.claimedQueries = 2;
  leaf.citation = "test";
  leaf.on0 = output(false);
  leaf.on1 = output(true);
  const auto p = axiomLeaf(leaf);
  CHECK(containsAxiom(p));
  CHECK(axiomLocations(p).size() == 1);
  try {
    simulate(p, leaf.table);
    FAIL("no throw");
  } catch (const NotSimulatableError& e) {
    CHECK(e.locations().size() == 1);
  }
  const auto r = simulateWithAxioms(p, leaf.table);
  CHECK(r.exact);
  CHECK(r.queriesUsedWorstCase == 2);
}

TEST_CASE("axiom table counts follow the closed formulas") {
  CHECK(axiomRow("EXACT_3^1")->queries == 2);
  CHECK(axiomRow("TH_4^2")->queries == 3);
  CHECK(axiomRow("EXACT_4^2")->queries == 2);
  CHECK(axiomRow("AND_OR_3")->queries == 2);
  CHECK_FALSE(axiomRow("TH_3^0").has_value());
  CHECK_FALSE(axiomRow("MAJ_3").has_value());
  for (const auto& row : axiomTable(6)) {
    const auto profile = symmetricProfile(row.representative);
    if (row.classId == "AND_OR_3") {
      CHECK_FALSE(profile.has_value());
      continue;
    }
    REQUIRE(profile.has_value());
    const unsigned n = row.arity;
    unsigned ones = 0;
    for (bool b : profile->bits) ones += b;
    if (row.classId.rfind("EXACT_", 0) == 0) {
      REQUIRE(ones == 1);
      unsigned k = 0;
      while (!profile->bits[k]) ++k;
      CHECK(row.queries == std::max(k, n - k));
    } else if (row.classId.rfind("TH_", 0) == 0) {
      const unsigned k = n + 1 - ones;
      CHECK(row.queries == std::max(k, n - k + 1));
    } else {
      CHECK(row.queries == n);
    }
  }
}

TEST_CASE("program utilities") {
  const auto p = parityProgram(4);
  CHECK(requiredArity(p) == 4);
  CHECK(containsQuantum(p));
  const auto moved = relabel(p, {3, 2, 1, 0});
  CHECK(simulate(moved, parityTable(4)).exact);
  const auto flipped = substituteOutputs(p, output(true), output(false));
  CHECK(simulate(flipped, ~parityTable(4)).exact);
  CHECK(nodeCount(output(true)) == 1);
}

TEST_CASE("program JSON round trip") {
  for (const auto& p : {parityProgram(5), naeProgram(4), agreeOrProgram({0, 1, 2}, 5, true), andChain({1, 0}, 2, true)}) {
    const unsigned n = std::max(requiredArity(p), 3u);
    const auto j = programToJson(p, n);
    CHECK(j["schema"] == kProgramSchema);
    const auto back = programFromJson(nlohmann::json::parse(j.dump()));
    CHECK(back.arity == n);
    CHECK(programToJson(back.root, n) == j);
    CHECK(queryCost(back.root) == queryCost(p));
  }
  CHECK_THROWS_AS(programFromJson(nlohmann::json::parse(R"({"schema":"other","arity":1,"root":{}})")), JsonFormatError);
  CHECK_THROWS_AS(programFromJson(nlohmann::json::parse(R"({"schema":"exactq.program/1","arity":2})")), JsonFormatError);
}
