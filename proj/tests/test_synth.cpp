#include <doctest.h>

#include <random>

#include "exactq/boolfun.hpp"
#include "exactq/function_text.hpp"
#include "exactq/program_json.hpp"
#include "exactq/synth.hpp"

using namespace exactq;

namespace {

TruthTable fromBits(std::initializer_list<int> bits) {
  SymmetricProfile p;
  for (int b : bits) p.bits.push_back(b != 0);
  return fromProfile(p);
}

Certificate axiomCertificate(const std::string& claimedClass, const TruthTable& actual, unsigned queries) {
  AxiomLeaf leaf;
  leaf.classId = claimedClass;
  leaf.arity = actual.arity();
  for (Var v = 0; v < actual.arity(); ++v) leaf.vars.push_back(v);
  leaf.table = actual;
  leaf.claimedQueries = queries;
  const auto row = axiomRow(claimedClass);
  leaf.citation = row ? row->citation : "none";
  leaf.on0 = output(false);
  leaf.on1 = output(true);
  Certificate c;
  c.function = actual;
  c.program = axiomLeaf(leaf);
  c.claimedQueries = queries;
  c.level = Level::CountCertified;
  c.rulesUsed = {{"R1-axiom", leaf.citation}};
  return c;
}

}  // namespace

TEST_CASE("named examples") {
  const auto and4 = synthesize(parseFunction("bin:0000000000000001"));
  CHECK(and4.claimedQueries == 4);
  CHECK(and4.optimal);
  CHECK(verifyCertificate(and4).ok);

  const auto parity4 = synthesize(fromBits({0, 1, 0, 1, 0}));
  CHECK(parity4.claimedQueries == 2);
  CHECK(parity4.level == Level::FullySimulated);

  const auto nae4 = synthesize(fromBits({0, 1, 1, 1, 0}));
  CHECK(nae4.claimedQueries <= 3);
  CHECK(nae4.level == Level::FullySimulated);
  CHECK(verifyCertificate(nae4).ok);

  const auto nae3 = synthesize(fromBits({0, 1, 1, 0}));
  CHECK(nae3.claimedQueries == 2);
  CHECK(nae3.level == Level::FullySimulated);

  const auto exact32 = synthesize(fromBits({0, 0, 1, 0}));
  CHECK(exact32.claimedQueries == 2);
  CHECK(exact32.level == Level::CountCertified);
  CHECK(verifyCertificate(exact32).ok);

  CHECK(synthesize(TruthTable::constant(3, true)).claimedQueries == 0);
  CHECK(synthesize(TruthTable::variable(3, 1)).claimedQueries == 1);
}

TEST_CASE("3-bit symmetric profiles cost 0, 3 or 2") {
  for (unsigned code = 0; code < 16; ++code) {
    SymmetricProfile p;
    for (unsigned w = 0; w < 4; ++w) p.bits.push_back((code >> w) & 1u);
    const auto f = fromProfile(p);
    const auto c = synthesize(f);
    const unsigned expected = f.isConstant() ? 0 : isAndIsomorphic(f) ? 3 : 2;
    CHECK_MESSAGE(c.claimedQueries == expected, p.toString());
    CHECK(verifyCertificate(c).ok);
  }
}

TEST_CASE("profiles of any arity: AND vector costs n, alternating costs half") {
  for (unsigned n = 1; n <= 9; ++n) {
    SymmetricProfile andVec;
    SymmetricProfile alt;
    for (unsigned w = 0; w <= n; ++w) {
      andVec.bits.push_back(w == n);
      alt.bits.push_back(w & 1u);
    }
    CHECK(synthesize(fromProfile(andVec)).claimedQueries == n);
    CHECK(synthesize(fromProfile(alt)).claimedQueries == (n + 1) / 2);
  }
}

TEST_CASE("soundness: every certificate up to n = 3 verifies") {
  Synthesizer s;
  for (unsigned n = 0; n <= 3; ++n) {
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << (1u << n)); ++w) {
      const auto f = TruthTable::fromWord(n, w);
      const auto c = s.synthesize(f);
      const auto r = verifyCertificate(c);
      REQUIRE_MESSAGE(r.ok, formatFunction(f));
      CHECK(r.recountedQueries == c.claimedQueries);
      CHECK(c.claimedQueries >= (degree(f) + 1) / 2);
      CHECK(c.claimedQueries <= decisionTreeDepth(f));
      CHECK((c.claimedQueries == n && n > 0) == isAndIsomorphic(f));
      CHECK(s.cost(f) == c.claimedQueries);
    }
  }
}

TEST_CASE("soundness on random 5-bit functions") {
  std::mt19937_64 rng(17);
  Synthesizer s;
  for (int k = 0; k < 200; ++k) {
    const auto f = TruthTable::fromWord(5, rng() & 0xffffffffu);
    const auto c = s.synthesize(f);
    REQUIRE_MESSAGE(verifyCertificate(c).ok, formatFunction(f));
    CHECK((c.claimedQueries == 5) == isAndIsomorphic(f));
    CHECK(c.claimedQueries >= (degree(f) + 1) / 2);
  }
}

TEST_CASE("verification rejects a tampered count") {
  auto c = synthesize(fromBits({0, 1, 0, 1, 0}));
  c.claimedQueries = 1;
  const auto r = verifyCertificate(c);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.problems.empty());
}

TEST_CASE("verification rejects a wrong program") {
  auto c = synthesize(fromBits({0, 1, 0, 1}));
  c.function = fromBits({1, 0, 1, 0});
  CHECK_FALSE(verifyCertificate(c).ok);
}

TEST_CASE("verification audits axiom leaves against the named class") {
  const auto th32 = fromBits({0, 0, 1, 1});
  CHECK(verifyCertificate(axiomCertificate("TH_3^2", th32, 2)).ok);
  const auto mislabelled = verifyCertificate(axiomCertificate("EXACT_3^1", th32, 2));
  CHECK_FALSE(mislabelled.ok);
  CHECK_FALSE(mislabelled.problems.empty());
  CHECK_FALSE(verifyCertificate(axiomCertificate("NOT_A_CLASS", th32, 2)).ok);
  CHECK_FALSE(verifyCertificate(axiomCertificate("TH_3^2", th32, 1)).ok);
}

TEST_CASE("certificate JSON round trip") {
  for (const auto& f : {fromBits({0, 0, 1, 0}), fromBits({0, 1, 1, 0, 1}), parseFunction("bin:0000000000000001"),
                        parseFunction("formula:(x1|x2)&~x3&(x4|x5)")}) {
    const auto c = synthesize(f);
    const auto j = certificateToJson(c);
    CHECK(j["schema"] == kCertificateSchema);
    const auto back = certificateFromJson(nlohmann::json::parse(j.dump()));
    CHECK(back.function == c.function);
    CHECK(back.claimedQueries == c.claimedQueries);
    CHECK(back.level == c.level);
    CHECK(back.rulesUsed == c.rulesUsed);
    CHECK(certificateToJson(back) == j);
    CHECK(verifyCertificate(back).ok);
  }
  CHECK_THROWS_AS(certificateFromJson(nlohmann::json::parse(R"({"schema":"exactq.certificate/1"})")), JsonFormatError);
}

TEST_CASE("level names") {
  for (Level l : {Level::FullySimulated, Level::CountCertified, Level::ClassicalOnly}) {
    CHECK(levelFromName(levelName(l)) == l);
  }
  CHECK_FALSE(levelFromName("Bogus").has_value());
  CHECK(levelOf(output(true)) == Level::ClassicalOnly);
}
