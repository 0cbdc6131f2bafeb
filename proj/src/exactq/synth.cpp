#include "exactq/synth.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <unordered_set>

#include "exactq/boolfun.hpp"
#include "exactq/function_text.hpp"
#include "exactq/program_json.hpp"

namespace exactq {

namespace {

const std::map<std::string, std::string>& ruleCitations() {
  static const std::map<std::string, std::string> kRules = {
      {"R0-constant", "constant function: no queries"},
      {"R1-variable", "single relevant variable: one classical query"},
      {"R2-and-chain", "AND-isomorphic: classical chain with early exit; Q_E(AND_n) = n [BBC+98]"},
      {"R3-parity", "PARITY_n: ceil(n/2) queries from pairwise XOR gadgets"},
      {"R3-nae", "NAE_n: chain of n-1 XOR gadgets with early exit"},
      {"R3-exact", "EXACT_n^k: max(k, n-k) queries [AISJ13]"},
      {"R3-threshold", "TH_n^k: max(k, n-k+1) queries [AISJ13]"},
      {"R4-and-or", "x1 AND (x2 OR x3): 2 queries [MJM11]"},
      {"R4-agree-or", "(x1 == x2) AND (x1 OR x3): one 2-query unitary block"},
      {"R5-and", "disjoint decomposition g AND h: Q_E <= Q_E(g) + Q_E(h)"},
      {"R5-or", "disjoint decomposition g OR h: Q_E <= Q_E(g) + Q_E(h)"},
      {"R6-classical", "Q_E(f) <= 1 + max(Q_E(f|x_i=0), Q_E(f|x_i=1))"},
      {"R6-xor", "one-query XOR observable: Q_E(f) <= 1 + max_c Q_E(f|x_i XOR x_j = c)"},
  };
  return kRules;
}

struct Plan {
  unsigned cost = 0;
  bool usesAxiom = false;
  NodePtr program;  // over the variables of the reduced table
  std::set<std::string> rules;
};
using PlanPtr = std::shared_ptr<const Plan>;

/// Ordering of alternative plans at one node: cheaper first, then
/// axiom-free, then earlier rule, then earlier observable.
using Key = std::tuple<unsigned, bool, int, unsigned>;

struct Candidate {
  Key key{UINT_MAX, true, INT_MAX, UINT_MAX};
  std::function<Plan()> build;
};

void offer(Candidate& best, Key key, std::function<Plan()> build) {
  if (key < best.key) {
    best.key = key;
    best.build = std::move(build);
  }
}

std::vector<Var> iotaVars(unsigned n) {
  std::vector<Var> v(n);
  for (unsigned k = 0; k < n; ++k) v[k] = k;
  return v;
}

/// Index map of a subproblem: sub-local t -> parent index, after `dropped` was
/// removed from the parent and `vars` selected by reduction.
std::vector<Var> liftMap(const std::vector<Var>& vars, Var dropped) {
  std::vector<Var> out;
  out.reserve(vars.size());
  for (Var v : vars) out.push_back(v < dropped ? v : v + 1);
  return out;
}

bool isParityProfile(const SymmetricProfile& p) {
  for (unsigned w = 0; w < p.bits.size(); ++w) {
    if (p.bits[w] != (w % 2 == 1)) return false;
  }
  return true;
}

std::optional<unsigned> exactWeight(const SymmetricProfile& p) {
  std::optional<unsigned> at;
  for (unsigned w = 0; w < p.bits.size(); ++w) {
    if (p.bits[w]) {
      if (at) return std::nullopt;
      at = w;
    }
  }
  return at;
}

std::optional<unsigned> thresholdWeight(const SymmetricProfile& p) {
  unsigned k = 0;
  while (k < p.bits.size() && !p.bits[k]) ++k;
  if (k == 0 || k == p.bits.size()) return std::nullopt;
  for (unsigned w = k; w < p.bits.size(); ++w) {
    if (!p.bits[w]) return std::nullopt;
  }
  return k;
}

struct SymmetricAxiom {
  std::string classId;
  std::string rule;
};

/// EXACT or TH class of a profile, trying the complement and reversal variants.
std::optional<SymmetricAxiom> symmetricAxiom(const SymmetricProfile& p) {
  const unsigned n = p.arity();
  const SymmetricProfile variants[] = {p, p.complemented(), p.reversed(), p.reversed().complemented()};
  for (const auto& v : variants) {
    if (auto k = exactWeight(v)) {
      return SymmetricAxiom{"EXACT_" + std::to_string(n) + "^" + std::to_string(*k), "R3-exact"};
    }
  }
  for (const auto& v : variants) {
    if (auto k = thresholdWeight(v)) {
      return SymmetricAxiom{"TH_" + std::to_string(n) + "^" + std::to_string(*k), "R3-threshold"};
    }
  }
  return std::nullopt;
}

/// (negMask, invert) with g(x) = NAE(x XOR negMask) XOR invert.
std::optional<std::pair<std::uint64_t, bool>> naeWitness(const TruthTable& g) {
  const unsigned k = g.arity();
  if (k < 3) return std::nullopt;
  const std::uint64_t ones = g.popcount();
  bool invert;
  if (ones == 2) {
    invert = true;
  } else if (ones == g.size() - 2) {
    invert = false;
  } else {
    return std::nullopt;
  }
  InputCode a = 0;
  while (g.get(a) != invert) ++a;
  const InputCode other = a ^ (g.size() - 1);
  if (g.get(other) != invert) return std::nullopt;
  return std::make_pair(std::uint64_t{a}, invert);
}

struct AgreeOrWitness {
  std::array<Var, 3> vars;
  std::uint64_t negMask = 0;
  bool invert = false;
};

/// Variable order and negations under which a 3-bit g is (l_a == l_b) AND (l_a OR l_c).
std::optional<AgreeOrWitness> agreeOrWitness(const TruthTable& g) {
  if (g.arity() != 3) return std::nullopt;
  std::array<Var, 3> vars{0, 1, 2};
  do {
    for (std::uint64_t neg = 0; neg < 8; ++neg) {
      const TruthTable h = TruthTable::fromPredicate(3, [&](InputCode x) {
        const bool a = ((x >> vars[0]) ^ neg) & 1u;
        const bool b = ((x >> vars[1]) ^ (neg >> 1)) & 1u;
        const bool c = ((x >> vars[2]) ^ (neg >> 2)) & 1u;
        return a == b && (a || c);
      });
      if (h == g) return AgreeOrWitness{vars, neg, false};
      if (~h == g) return AgreeOrWitness{vars, neg, true};
    }
  } while (std::next_permutation(vars.begin(), vars.end()));
  return std::nullopt;
}

const TruthTable& andOrCanonical() {
  static const TruthTable kTable = npnCanonical(axiomRow("AND_OR_3")->representative).table;
  return kTable;
}

NodePtr makeAxiom(const AxiomRow& row, const TruthTable& table) {
  AxiomLeaf leaf;
  leaf.classId = row.classId;
  leaf.arity = row.arity;
  leaf.vars = iotaVars(row.arity);
  leaf.table = table;
  leaf.claimedQueries = row.queries;
  leaf.citation = row.citation;
  leaf.on0 = output(false);
  leaf.on1 = output(true);
  return axiomLeaf(std::move(leaf));
}

struct Decomposition {
  bool isAnd = false;
  std::vector<Var> left;
  std::vector<Var> right;
  TruthTable a;
  TruthTable b;
};

/// g = a(left) op b(right) on disjoint variable sets, first split in mask order.
std::optional<Decomposition> disjointDecomposition(const TruthTable& g) {
  const unsigned k = g.arity();
  const std::uint64_t full = (std::uint64_t{1} << k) - 1;
  for (std::uint64_t mask = 1; mask < full; mask += 2) {
    std::vector<Var> left;
    std::vector<Var> right;
    for (Var v = 0; v < k; ++v) ((mask >> v) & 1u ? left : right).push_back(v);
    auto codes = [](const std::vector<Var>& vars) {
      std::vector<InputCode> out(std::size_t{1} << vars.size());
      for (InputCode s = 0; s < out.size(); ++s) {
        InputCode m = 0;
        for (std::size_t t = 0; t < vars.size(); ++t) m |= ((s >> t) & 1u) << vars[t];
        out[s] = m;
      }
      return out;
    };
    const auto rowCodes = codes(left);
    const auto colCodes = codes(right);
    for (const bool isAnd : {true, false}) {
      TruthTable a(static_cast<unsigned>(left.size()));
      TruthTable b(static_cast<unsigned>(right.size()));
      // AND: a[s] = row s not all zero. OR: a[s] = row s all ones.
      for (InputCode s = 0; s < rowCodes.size(); ++s) {
        bool any = false;
        bool all = true;
        for (InputCode t = 0; t < colCodes.size(); ++t) {
          const bool v = g.get(rowCodes[s] | colCodes[t]);
          any |= v;
          all &= v;
        }
        a.set(s, isAnd ? any : all);
      }
      for (InputCode t = 0; t < colCodes.size(); ++t) {
        bool any = false;
        bool all = true;
        for (InputCode s = 0; s < rowCodes.size(); ++s) {
          const bool v = g.get(rowCodes[s] | colCodes[t]);
          any |= v;
          all &= v;
        }
        b.set(t, isAnd ? any : all);
      }
      bool ok = !a.isConstant() && !b.isConstant();
      for (InputCode s = 0; ok && s < rowCodes.size(); ++s) {
        for (InputCode t = 0; ok && t < colCodes.size(); ++t) {
          const bool expect = isAnd ? (a.get(s) && b.get(t)) : (a.get(s) || b.get(t));
          ok = g.get(rowCodes[s] | colCodes[t]) == expect;
        }
      }
      if (ok) return Decomposition{isAnd, left, right, a, b};
    }
  }
  return std::nullopt;
}

}  // namespace

struct Synthesizer::Impl {
  SynthOptions options;
  std::unordered_map<TruthTable, PlanPtr, TruthTableHash> memo;

  struct SubPlan {
    PlanPtr plan;
    std::vector<Var> vars;  // reduced-local -> caller-local before lifting
  };

  // Canonical forms of the EXACT/TH classes per arity, for non-symmetric members.
  std::unordered_map<unsigned, std::vector<std::pair<TruthTable, SymmetricAxiom>>> symmetricCanon;

  std::optional<SymmetricAxiom> npnSymmetricAxiom(const TruthTable& g) {
    const unsigned k = g.arity();
    if (k > kMaxNpnArity) return std::nullopt;
    auto [it, fresh] = symmetricCanon.try_emplace(k);
    if (fresh) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k + 1)); ++mask) {
        SymmetricProfile p;
        for (unsigned w = 0; w <= k; ++w) p.bits.push_back((mask >> w) & 1u);
        if (auto ax = symmetricAxiom(p)) it->second.emplace_back(npnCanonical(fromProfile(p)).table, *ax);
      }
    }
    const std::uint64_t ones = g.popcount();
    bool candidate = false;
    for (const auto& [table, ax] : it->second) candidate |= table.popcount() == ones || table.popcount() == g.size() - ones;
    if (!candidate) return std::nullopt;
    const TruthTable canon = npnCanonical(g).table;
    for (const auto& [table, ax] : it->second) {
      if (table == canon) return ax;
    }
    return std::nullopt;
  }

  SubPlan solveAny(const TruthTable& h) {
    ReducedFunction r = reduceToEssential(h);
    return {solve(r.table), std::move(r.vars)};
  }

  PlanPtr solve(const TruthTable& g) {
    if (auto it = memo.find(g); it != memo.end()) return it->second;
    auto plan = std::make_shared<const Plan>(compute(g));
    memo.emplace(g, plan);
    return plan;
  }

  Plan compute(const TruthTable& g) {
    const unsigned k = g.arity();
    if (k == 0) return {0, false, output(g.get(0)), {"R0-constant"}};
    if (k == 1) return {1, false, classical(0, output(g.get(0)), output(g.get(1))), {"R1-variable"}};
    if (isAndIsomorphic(g)) {
      const bool single1 = g.popcount() == 1;
      InputCode m = 0;
      while (g.get(m) != single1) ++m;
      // Literal v is satisfied at m; negate it where m has a 0.
      const std::uint64_t neg = ~m & ((std::uint64_t{1} << k) - 1);
      return {k, false, andChain(iotaVars(k), neg, !single1), {"R2-and-chain"}};
    }

    Candidate best;
    const auto profile = symmetricProfile(g);

    // R3: named symmetric classes, up to negations and permutations.
    if (profile && (isParityProfile(*profile) || isParityProfile(profile->complemented()))) {
      const bool invert = !isParityProfile(*profile);
      offer(best, {(k + 1) / 2, false, 3, 0}, [=] {
        return Plan{(k + 1) / 2, false, parityProgram(iotaVars(k), invert), {"R3-parity"}};
      });
    } else if (auto nae = naeWitness(g)) {
      offer(best, {k - 1, false, 3, 0}, [=] {
        return Plan{k - 1, false, naeProgram(iotaVars(k), nae->first, nae->second), {"R3-nae"}};
      });
    } else if (auto ax = profile ? symmetricAxiom(*profile) : npnSymmetricAxiom(g)) {
      const AxiomRow row = *axiomRow(ax->classId);
      offer(best, {row.queries, true, 3, 0},
            [=] { return Plan{row.queries, true, makeAxiom(row, g), {ax->rule}}; });
    }

    // R4: non-symmetric 3-bit classes with 2-query algorithms.
    if (k == 3 && !profile) {
      if (npnCanonical(g).table == andOrCanonical()) {
        const AxiomRow row = *axiomRow("AND_OR_3");
        offer(best, {2, true, 4, 0}, [=] { return Plan{2, true, makeAxiom(row, g), {"R4-and-or"}}; });
      } else if (auto w = agreeOrWitness(g)) {
        offer(best, {2, false, 4, 0}, [=] {
          return Plan{2, false, agreeOrProgram(w->vars, w->negMask, w->invert), {"R4-agree-or"}};
        });
      }
    }

    // R5: disjoint AND/OR decomposition.
    if (!profile && k <= options.decomposeMaxArity) {
      if (auto d = disjointDecomposition(g)) {
        const SubPlan a = solveAny(d->a);
        const SubPlan b = solveAny(d->b);
        const unsigned cost = a.plan->cost + b.plan->cost;
        const bool axiom = a.plan->usesAxiom || b.plan->usesAxiom;
        offer(best, {cost, axiom, 5, 0}, [=] {
          auto lift = [](const SubPlan& s, const std::vector<Var>& side) {
            std::vector<Var> map;
            for (Var v : s.vars) map.push_back(side[v]);
            return relabel(s.plan->program, map);
          };
          const NodePtr pa = lift(a, d->left);
          const NodePtr pb = lift(b, d->right);
          Plan p{cost, axiom,
                 d->isAnd ? substituteOutputs(pa, output(false), pb) : substituteOutputs(pa, pb, output(true)),
                 {d->isAnd ? "R5-and" : "R5-or"}};
          p.rules.insert(a.plan->rules.begin(), a.plan->rules.end());
          p.rules.insert(b.plan->rules.begin(), b.plan->rules.end());
          return p;
        });
      }
    }

    // R6: observable splits with branch-and-bound.
    const bool narrow = k > options.fullSplitMaxArity || (profile && k > 5);
    const bool useXor = !narrow && k <= options.xorMaxArity;
    unsigned rank = 0;
    auto trySplit = [&](bool isXor, Var i, Var j, const TruthTable& s0, const TruthTable& s1) {
      const unsigned obs = rank++;
      const SubPlan p0 = solveAny(s0);
      if (1 + p0.plan->cost > std::get<0>(best.key)) return;
      const SubPlan p1 = solveAny(s1);
      const unsigned cost = 1 + std::max(p0.plan->cost, p1.plan->cost);
      const bool axiom = p0.plan->usesAxiom || p1.plan->usesAxiom;
      const Var dropped = isXor ? j : i;
      offer(best, {cost, axiom, 6, obs}, [=] {
        const NodePtr c0 = relabel(p0.plan->program, liftMap(p0.vars, dropped));
        const NodePtr c1 = relabel(p1.plan->program, liftMap(p1.vars, dropped));
        Plan p{cost, axiom, isXor ? xorQuery(i, j, c0, c1) : classical(i, c0, c1),
               {isXor ? "R6-xor" : "R6-classical"}};
        p.rules.insert(p0.plan->rules.begin(), p0.plan->rules.end());
        p.rules.insert(p1.plan->rules.begin(), p1.plan->rules.end());
        return p;
      });
    };
    if (useXor) {
      for (Var i = 0; i < k; ++i) {
        for (Var j = i + 1; j < k; ++j) {
          trySplit(true, i, j, substituteXor(g, i, j, false), substituteXor(g, i, j, true));
        }
      }
    }
    const Var lastSplit = narrow ? 1 : k;
    for (Var i = 0; i < lastSplit; ++i) trySplit(false, i, i, restrict(g, i, false), restrict(g, i, true));

    return best.build();
  }
};

Synthesizer::Synthesizer(SynthOptions options) : impl_(std::make_unique<Impl>()) { impl_->options = options; }
Synthesizer::~Synthesizer() = default;
Synthesizer::Synthesizer(Synthesizer&&) noexcept = default;
Synthesizer& Synthesizer::operator=(Synthesizer&&) noexcept = default;

unsigned Synthesizer::cost(const TruthTable& f) { return impl_->solve(reduceToEssential(f).table)->cost; }

std::size_t Synthesizer::memoSize() const { return impl_->memo.size(); }

Level levelOf(const NodePtr& program) {
  if (containsAxiom(program)) return Level::CountCertified;
  if (containsQuantum(program)) return Level::FullySimulated;
  return Level::ClassicalOnly;
}

Certificate Synthesizer::synthesize(const TruthTable& f) {
  const ReducedFunction r = reduceToEssential(f);
  const PlanPtr plan = impl_->solve(r.table);
  Certificate c;
  c.function = f;
  c.program = relabel(plan->program, r.vars);
  c.claimedQueries = queryCost(c.program);
  c.level = levelOf(c.program);
  c.optimal = isAndIsomorphic(f);
  c.guaranteeAsserted = f.arity() <= kGuaranteeArity;
  for (const auto& id : plan->rules) c.rulesUsed.push_back({id, ruleCitations().at(id)});
  return c;
}

Certificate synthesize(const TruthTable& f) { return Synthesizer().synthesize(f); }

std::string levelName(Level level) {
  switch (level) {
    case Level::FullySimulated: return "FullySimulated";
    case Level::CountCertified: return "CountCertified";
    case Level::ClassicalOnly: return "ClassicalOnly";
  }
  return "?";
}

std::optional<Level> levelFromName(const std::string& name) {
  for (Level l : {Level::FullySimulated, Level::CountCertified, Level::ClassicalOnly}) {
    if (levelName(l) == name) return l;
  }
  return std::nullopt;
}

// Verification -----------------------------------------------------------------

namespace {

bool npnEquivalent(const TruthTable& a, const TruthTable& b) {
  if (a.arity() != b.arity()) return false;
  if (a.arity() <= kMaxNpnArity) return npnCanonical(a).table == npnCanonical(b).table;
  const auto pa = symmetricProfile(a);
  const auto pb = symmetricProfile(b);
  if (!pa || !pb) return false;
  return *pa == *pb || *pa == pb->complemented() || *pa == pb->reversed() ||
         *pa == pb->reversed().complemented();
}

void auditAxioms(const NodePtr& program, std::vector<std::string>& problems) {
  std::unordered_set<const Node*> audited;
  std::function<void(const NodePtr&, const std::string&)> walk = [&](const NodePtr& node, const std::string& path) {
    if (!node || !audited.insert(node.get()).second) return;
    if (const auto* a = std::get_if<AxiomLeaf>(&node->body)) {
      const auto row = axiomRow(a->classId);
      if (!row) {
        problems.push_back("unknown axiom class '" + a->classId + "' at " + path);
      } else {
        if (a->arity != row->arity || a->table.arity() != row->arity || a->vars.size() != row->arity) {
          problems.push_back("axiom " + a->classId + " has wrong arity at " + path);
        } else if (!npnEquivalent(a->table, row->representative)) {
          problems.push_back("axiom table is not isomorphic to " + a->classId + " at " + path);
        }
        if (a->claimedQueries != row->queries) {
          problems.push_back("axiom " + a->classId + " claims " + std::to_string(a->claimedQueries) +
                             " queries, table says " + std::to_string(row->queries) + " at " + path);
        }
        if (a->citation != row->citation) {
          problems.push_back("axiom " + a->classId + " cites '" + a->citation + "', table says '" +
                             row->citation + "' at " + path);
        }
      }
    }
    std::visit([&](const auto& body) {
      using T = std::decay_t<decltype(body)>;
      if constexpr (std::is_same_v<T, UnitaryBlock>) {
        for (std::size_t k = 0; k < body.outcomes.size(); ++k) walk(body.outcomes[k], path + "/" + std::to_string(k));
      } else if constexpr (!std::is_same_v<T, Output>) {
        walk(body.on0, path + "/0");
        walk(body.on1, path + "/1");
      }
    }, node->body);
  };
  walk(program, "$");
}

}  // namespace

VerificationResult verifyCertificate(const Certificate& c) {
  VerificationResult result;
  if (!c.program) {
    result.problems.push_back("certificate has no program at $");
    return result;
  }
  try {
    result.recountedQueries = queryCost(c.program);
  } catch (const std::exception& e) {
    result.problems.push_back(std::string("cannot count queries: ") + e.what());
    return result;
  }
  if (result.recountedQueries != c.claimedQueries) {
    result.problems.push_back("claimedQueries is " + std::to_string(c.claimedQueries) + " but the program costs " +
                              std::to_string(result.recountedQueries) + " at $");
  }
  const Level actual = levelOf(c.program);
  if (actual != c.level) {
    result.problems.push_back("level " + levelName(c.level) + " does not match program contents (" +
                              levelName(actual) + ") at $");
  }
  auditAxioms(c.program, result.problems);
  try {
    SimulationReport report =
        actual == Level::CountCertified ? simulateWithAxioms(c.program, c.function) : simulate(c.program, c.function);
    if (!report.exact) {
      std::string inputs;
      for (std::size_t k = 0; k < report.failingInputs.size() && k < 8; ++k) {
        inputs += (k ? "," : "") + std::to_string(report.failingInputs[k]);
      }
      result.problems.push_back("program is not exact (worst wrong amplitude " +
                                std::to_string(report.worstWrongAmplitude) + ", failing inputs " + inputs + ") at $");
    }
    if (report.queriesUsedWorstCase > result.recountedQueries) {
      result.problems.push_back("simulation used more queries than the static count at $");
    }
    result.report = std::move(report);
  } catch (const ProgramError& e) {
    result.problems.push_back(e.what());
  } catch (const std::exception& e) {
    result.problems.push_back(std::string("simulation failed: ") + e.what());
  }
  if (c.optimal && !(isAndIsomorphic(c.function) && c.claimedQueries == c.function.arity())) {
    result.problems.push_back("optimal flag is only valid for AND-isomorphic functions at n queries at $");
  }
  result.ok = result.problems.empty();
  return result;
}

// JSON -------------------------------------------------------------------------

nlohmann::json certificateToJson(const Certificate& c) {
  nlohmann::json rules = nlohmann::json::array();
  for (const auto& r : c.rulesUsed) rules.push_back({{"id", r.id}, {"citation", r.citation}});
  return {{"schema", kCertificateSchema},
          {"function", formatFunction(c.function)},
          {"arity", c.function.arity()},
          {"claimedQueries", c.claimedQueries},
          {"level", levelName(c.level)},
          {"optimal", c.optimal},
          {"guarantee", c.guaranteeAsserted ? "asserted" : "guarantee not asserted"},
          {"rulesUsed", std::move(rules)},
          {"program", nodeToJson(c.program)}};
}

Certificate certificateFromJson(const nlohmann::json& j) {
  auto need = [&](const char* key) -> const nlohmann::json& {
    if (!j.is_object() || !j.contains(key)) throw JsonFormatError(std::string("certificate json: missing field '") + key + "'");
    return j.at(key);
  };
  try {
    if (need("schema").get<std::string>() != kCertificateSchema) {
      throw JsonFormatError(std::string("certificate json: schema must be \"") + kCertificateSchema + "\"");
    }
    Certificate c;
    c.function = parseFunction(need("function").get<std::string>());
    c.claimedQueries = need("claimedQueries").get<unsigned>();
    const auto level = levelFromName(need("level").get<std::string>());
    if (!level) throw JsonFormatError("certificate json: unknown level");
    c.level = *level;
    c.optimal = need("optimal").get<bool>();
    c.guaranteeAsserted = need("guarantee").get<std::string>() == "asserted";
    for (const auto& r : need("rulesUsed")) {
      c.rulesUsed.push_back({r.at("id").get<std::string>(), r.at("citation").get<std::string>()});
    }
    c.program = nodeFromJson(need("program"));
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw JsonFormatError(std::string("certificate json: ") + e.what());
  } catch (const FunctionParseError& e) {
    throw JsonFormatError(std::string("certificate json: ") + e.what());
  }
}

}  // namespace exactq
