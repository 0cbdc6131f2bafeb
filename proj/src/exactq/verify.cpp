#include "exactq/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <iomanip>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "exactq/boolfun.hpp"
#include "exactq/formula.hpp"
#include "exactq/function_text.hpp"
#include "exactq/program.hpp"
#include "exactq/synth.hpp"

namespace exactq {

namespace {

using Json = nlohmann::ordered_json;

/// Counts checked units. A direct expect() is one unit; an absorbed Checks is
/// one unit however many expectations it holds, so a population item with
/// several properties counts once.
class Checks {
 public:
  template <class Describe>
  bool expect(bool ok, Describe&& describe) {
    ++checked_;
    if (!ok) {
      ++failed_;
      failures_.push_back(describe());
    }
    return ok;
  }

  void absorb(Checks&& item) {
    if (item.checked_ == 0) return;
    ++checked_;
    if (item.failed_ > 0) ++failed_;
    std::move(item.failures_.begin(), item.failures_.end(), std::back_inserter(failures_));
  }

  std::uint64_t checked() const { return checked_; }
  std::uint64_t failed() const { return failed_; }
  std::vector<SuiteFailure>& failures() { return failures_; }

 private:
  std::uint64_t checked_ = 0;
  std::uint64_t failed_ = 0;
  std::vector<SuiteFailure> failures_;
};

struct Worker {
  Synthesizer synth;
};

/// fn(index, worker) for every index, spread over `jobs` threads with one
/// Worker each. Results come back in index order whatever the job count.
template <class T, class F>
std::vector<T> parallelMap(std::size_t count, unsigned jobs, F&& fn) {
  std::vector<T> out(count);
  const unsigned threads = static_cast<unsigned>(std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(count, 1)));
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned w) {
    try {
      Worker worker;
      for (std::size_t i = w; i < count; i += threads) out[i] = fn(i, worker);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return splitmix(splitmix(splitmix(seed) ^ a) ^ b);
}

TruthTable randomTable(unsigned n, std::mt19937_64& rng) {
  if (n <= 6) return TruthTable::fromWord(n, rng());
  TruthTable f(n);
  for (auto& w : f.mutableWords()) w = rng();
  return f;
}

std::string str(std::uint64_t v) { return std::to_string(v); }

SymmetricProfile profileOf(unsigned n, std::uint64_t mask) {
  SymmetricProfile p;
  for (unsigned w = 0; w <= n; ++w) p.bits.push_back((mask >> w) & 1u);
  return p;
}

std::string profileText(const SymmetricProfile& p) { return "profile:" + p.toString(); }

std::string joined(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : "; ") + s;
  return out;
}

unsigned ceilHalf(unsigned n) { return (n + 1) / 2; }

// Literal forms used by the lemma statements ----------------------------------

/// AND over n literals: exactly one true entry.
bool andForm(const TruthTable& h) { return h.popcount() == 1; }
/// OR over n literals: exactly one false entry.
bool orForm(const TruthTable& h) { return h.popcount() + 1 == h.size(); }
bool andIsomorphicForm(const TruthTable& h) { return andForm(h) || orForm(h); }

InputCode singleZero(const TruthTable& h) {
  InputCode z = 0;
  while (h.get(z)) ++z;
  return z;
}

/// Index of v in a restriction that dropped `dropped`.
Var afterDrop(Var v, Var dropped) { return v < dropped ? v : v - 1; }

/// In an OR form the literal of v is positive iff the zero point has v = 0.
bool positiveInOr(const TruthTable& h, Var v) { return ((singleZero(h) >> v) & 1u) == 0; }

TruthTable andTable(unsigned n) { return TruthTable::fromPredicate(n, [&](InputCode x) { return x + 1 == (InputCode{1} << n); }); }
TruthTable orTable(unsigned n) { return TruthTable::fromPredicate(n, [](InputCode x) { return x != 0; }); }

/// Every image of AND_n under input negations, permutations and output negation.
std::unordered_set<TruthTable, TruthTableHash> andOrbitSet(unsigned n) {
  std::unordered_set<TruthTable, TruthTableHash> out;
  const TruthTable base = andTable(n);
  NpnTransform t = NpnTransform::identity(n);
  std::sort(t.perm.begin(), t.perm.end());
  do {
    for (std::uint64_t neg = 0; neg < (std::uint64_t{1} << n); ++neg) {
      for (bool outNeg : {false, true}) {
        t.inputNeg = neg;
        t.outputNeg = outNeg;
        out.insert(apply(t, base));
      }
    }
  } while (std::next_permutation(t.perm.begin(), t.perm.end()));
  return out;
}

struct AndOrbit {
  std::unordered_set<TruthTable, TruthTableHash> members;
  std::vector<TruthTable> sorted;  ///< by table word, for a stable iteration order

  explicit AndOrbit(unsigned n) : members(andOrbitSet(n)), sorted(members.begin(), members.end()) {
    std::sort(sorted.begin(), sorted.end(),
              [](const TruthTable& a, const TruthTable& b) { return a.asWord() < b.asWord(); });
  }
  bool contains(const TruthTable& f) const { return members.count(f) > 0; }
};

// theorem1 --------------------------------------------------------------------

struct Table1Row {
  const char* bits;
  const char* name;
  unsigned cost;
};

constexpr Table1Row kTable1[] = {
    {"0000", "constant", 0},
    {"0001", "AND_3", 3},
    {"0010", "EXACT_3^2", 2},
    {"0011", "TH_3^2", 2},
    {"0100", "EXACT_3^1", 2},
    {"0101", "PARITY_3", 2},
    {"0110", "NAE_3", 2},
    {"0111", "isomorphic to AND_3", 3},
    {"1000", "isomorphic to AND_3", 3},
    {"1001", "isomorphic to NAE_3", 2},
    {"1010", "isomorphic to PARITY_3", 2},
    {"1011", "isomorphic to EXACT_3^1", 2},
    {"1100", "isomorphic to TH_3^2", 2},
    {"1101", "isomorphic to EXACT_3^2", 2},
    {"1110", "isomorphic to AND_3", 3},
    {"1111", "constant", 0},
};

enum class Bound { Full, K, BelowFull };

struct Table2Row {
  const char* pattern;
  std::function<bool(unsigned, unsigned)> bit;  // (weight, n) -> b_weight
  Bound bound;
};

const std::vector<Table2Row>& table2() {
  static const std::vector<Table2Row> kRows = {
      {"(0,|0,...,0,1)", [](unsigned w, unsigned n) { return w == n; }, Bound::Full},
      {"(0,|0,1,...,1)", [](unsigned w, unsigned) { return w >= 2; }, Bound::K},
      {"(0,|1,0,...,0)", [](unsigned w, unsigned) { return w == 1; }, Bound::K},
      {"(0,|1,...,1,0)", [](unsigned w, unsigned n) { return w >= 1 && w + 1 <= n; }, Bound::BelowFull},
      {"(1,|0,...,0,1)", [](unsigned w, unsigned n) { return w == 0 || w == n; }, Bound::BelowFull},
      {"(1,|0,1,...,1)", [](unsigned w, unsigned) { return w != 1; }, Bound::K},
      {"(1,|1,0,...,0)", [](unsigned w, unsigned) { return w <= 1; }, Bound::K},
      {"(1,|1,...,1,0)", [](unsigned w, unsigned n) { return w + 1 <= n; }, Bound::Full},
      {"(0,...,0,1,|0)", [](unsigned w, unsigned n) { return w + 1 == n; }, Bound::K},
      {"(0,1,...,1,|0)", [](unsigned w, unsigned n) { return w >= 1 && w + 1 <= n; }, Bound::BelowFull},
      {"(1,0,...,0,|0)", [](unsigned w, unsigned) { return w == 0; }, Bound::Full},
      {"(1,...,1,0,|0)", [](unsigned w, unsigned n) { return w + 2 <= n; }, Bound::K},
      {"(0,...,0,1,|1)", [](unsigned w, unsigned n) { return w + 1 >= n; }, Bound::K},
      {"(0,1,...,1,|1)", [](unsigned w, unsigned) { return w >= 1; }, Bound::Full},
      {"(1,0,...,0,|1)", [](unsigned w, unsigned n) { return w == 0 || w == n; }, Bound::BelowFull},
      {"(1,...,1,0,|1)", [](unsigned w, unsigned n) { return w + 1 != n; }, Bound::K},
  };
  return kRows;
}

/// The four vectors (0,...,0,1), (0,1,...,1), (1,0,...,0), (1,...,1,0).
bool isAndVector(const SymmetricProfile& p) {
  const unsigned n = p.arity();
  auto matches = [&](auto pred) {
    for (unsigned w = 0; w <= n; ++w) {
      if (p.bits[w] != pred(w)) return false;
    }
    return true;
  };
  return matches([&](unsigned w) { return w == n; }) || matches([](unsigned w) { return w != 0; }) ||
         matches([](unsigned w) { return w == 0; }) || matches([&](unsigned w) { return w != n; });
}

SuiteReport theorem1(unsigned maxN, Checks& c) {
  Synthesizer synth;
  SuiteReport r;
  r.population = "all symmetric profiles for n = 1.." + str(maxN) + ", Table 1 at n = 3, Table 2 rows for n = 4.." +
                 str(maxN);
  Json perN = Json::array();
  for (unsigned n = 1; n <= maxN; ++n) {
    std::uint64_t atN = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n + 1)); ++mask) {
      const SymmetricProfile p = profileOf(n, mask);
      const Certificate cert = synth.synthesize(fromProfile(p));
      const VerificationResult vr = verifyCertificate(cert);
      const std::string input = profileText(p);
      Checks item;
      item.expect(vr.ok, [&] { return SuiteFailure{input, "certificate verifies", joined(vr.problems)}; });
      const bool andVector = isAndVector(p);
      const bool ok = andVector ? cert.claimedQueries == n : cert.claimedQueries + 1 <= n;
      item.expect(ok, [&] {
        return SuiteFailure{input, andVector ? str(n) + " queries" : "at most " + str(n - 1) + " queries",
                            str(cert.claimedQueries)};
      });
      bool alternating = true;
      for (unsigned w = 1; w <= n; ++w) alternating &= p.bits[w] != p.bits[w - 1];
      if (alternating) {
        item.expect(cert.claimedQueries == ceilHalf(n), [&] {
          return SuiteFailure{input, "parity costs " + str(ceilHalf(n)), str(cert.claimedQueries)};
        });
      }
      c.absorb(std::move(item));
      atN += cert.claimedQueries == n;
    }
    perN.push_back(Json{{"n", n}, {"profiles", std::uint64_t{1} << (n + 1)}, {"costN", atN}});
  }
  r.metrics["perArity"] = perN;

  if (maxN >= 3) {
    for (const Table1Row& row : kTable1) {
      SymmetricProfile p;
      for (const char* b = row.bits; *b; ++b) p.bits.push_back(*b == '1');
      const std::string input = profileText(p);
      const std::string name = symmetricClassName(p);
      Checks item;
      item.expect(name == row.name, [&] { return SuiteFailure{input, row.name, name}; });
      const unsigned cost = synth.cost(fromProfile(p));
      item.expect(cost == row.cost, [&] { return SuiteFailure{input, str(row.cost) + " queries", str(cost)}; });
      c.absorb(std::move(item));
    }
  }

  for (unsigned n = 4; n <= maxN; ++n) {
    const unsigned k = n - 1;
    for (const Table2Row& row : table2()) {
      SymmetricProfile p;
      for (unsigned w = 0; w <= n; ++w) p.bits.push_back(row.bit(w, n));
      const unsigned cost = synth.cost(fromProfile(p));
      bool ok = false;
      std::string expected;
      switch (row.bound) {
        case Bound::Full:
          ok = cost == n;
          expected = str(n);
          break;
        case Bound::K:
          ok = cost == k;
          expected = str(k);
          break;
        case Bound::BelowFull:
          ok = cost <= k;
          expected = "at most " + str(k);
          break;
      }
      c.expect(ok, [&] {
        return SuiteFailure{profileText(p) + " row " + row.pattern + " k=" + str(k), expected + " queries", str(cost)};
      });
    }
  }
  return r;
}

// classical-depth ---------------------------------------------------------------

constexpr unsigned kReadOnceSamples = 1000;

SuiteReport classicalDepth(const SuiteOptions& o, unsigned maxN, Checks& c) {
  SuiteReport r;
  r.population = "non-constant symmetric functions for n = 1.." + str(maxN) + " and " + str(kReadOnceSamples) +
                 " random read-once formulas per n";
  std::uint64_t symmetricCount = 0;
  for (unsigned n = 1; n <= maxN; ++n) {
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << (n + 1)); ++mask) {
      const SymmetricProfile p = profileOf(n, mask);
      const TruthTable f = fromProfile(p);
      const unsigned d = decisionTreeDepth(f);
      const unsigned deg = degree(f);
      Checks item;
      item.expect(d == n, [&] { return SuiteFailure{profileText(p), "D = " + str(n), str(d)}; });
      item.expect(d >= deg, [&] { return SuiteFailure{profileText(p), "D >= deg = " + str(deg), str(d)}; });
      c.absorb(std::move(item));
      ++symmetricCount;
    }
  }

  auto results = parallelMap<Checks>(std::size_t{maxN} * kReadOnceSamples, o.jobs, [&](std::size_t idx, Worker&) {
    Checks local;
    const unsigned n = static_cast<unsigned>(idx / kReadOnceSamples) + 1;
    const FormulaAst ast = randomReadOnce(n, mix(o.seed, n, idx % kReadOnceSamples));
    const TruthTable f = toTruthTable(ast);
    const std::string input = "formula:" + ast.toString();
    const auto recognized = recognizeReadOnce(f);
    local.expect(recognized && toTruthTable(*recognized) == f,
                 [&] { return SuiteFailure{input, "recognized as read-once", "not recognized"}; });
    const unsigned d = decisionTreeDepth(f);
    const MultilinearPoly poly = multilinear(f);
    const unsigned deg = poly.degree();
    const std::int64_t top = poly.coefficient((std::uint64_t{1} << n) - 1);
    local.expect(d == n, [&] { return SuiteFailure{input, "D = " + str(n), str(d)}; });
    local.expect(deg == n, [&] { return SuiteFailure{input, "deg = " + str(n), str(deg)}; });
    local.expect(top == 1 || top == -1,
                 [&] { return SuiteFailure{input, "top coefficient +-1", std::to_string(top)}; });
    local.expect(d >= deg, [&] { return SuiteFailure{input, "D >= deg = " + str(deg), str(d)}; });
    return local;
  });
  for (auto& l : results) c.absorb(std::move(l));
  r.metrics["symmetricFunctions"] = symmetricCount;
  r.metrics["readOnceFormulas"] = std::uint64_t{maxN} * kReadOnceSamples;
  return r;
}

// lemma1 -------------------------------------------------------------------------

constexpr std::size_t kLemma1Samples = 100000;

SuiteReport lemma1(const SuiteOptions& o, unsigned maxN, Checks& c) {
  SuiteReport r;
  r.population = str(kLemma1Samples) + " random truth tables, n uniform in 1.." + str(maxN);
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<unsigned> arity(1, maxN);
  std::vector<TruthTable> tables;
  tables.reserve(kLemma1Samples);
  for (std::size_t i = 0; i < kLemma1Samples; ++i) tables.push_back(randomTable(arity(rng), rng));

  struct Item {
    Checks checks;
    bool tight = false;
  };
  auto results = parallelMap<Item>(tables.size(), o.jobs, [&](std::size_t i, Worker&) {
    Item item;
    const TruthTable& f = tables[i];
    const unsigned d = decisionTreeDepth(f);
    const unsigned deg = degree(f);
    item.checks.expect(d >= deg, [&] { return SuiteFailure{formatFunction(f), "D >= deg = " + str(deg), str(d)}; });
    item.tight = d == deg;
    return item;
  });
  std::uint64_t tight = 0;
  for (auto& item : results) {
    tight += item.tight;
    c.absorb(std::move(item.checks));
  }
  std::vector<std::uint64_t> perN(maxN + 1, 0);
  for (const auto& f : tables) ++perN[f.arity()];
  Json counts = Json::object();
  for (unsigned n = 1; n <= maxN; ++n) counts[str(n)] = perN[n];
  r.metrics["tablesPerArity"] = counts;
  r.metrics["depthEqualsDegree"] = tight;
  return r;
}

// theorem6 ---------------------------------------------------------------------------

constexpr std::uint64_t kNpnClasses4 = 222;

SuiteReport theorem6(const SuiteOptions& o, Checks& c) {
  SuiteReport r;
  r.population = "all 65536 4-bit truth tables, plus the AND-isomorphic count and the NPN class count";
  const TruthTable and4 = andTable(4);
  const TruthTable or4 = orTable(4);
  struct Item {
    Checks checks;
    unsigned cost = 0;
    Level level = Level::ClassicalOnly;
    std::uint64_t canonical = 0;
    bool andIsomorphic = false;
  };
  auto results = parallelMap<Item>(65536, o.jobs, [&](std::size_t code, Worker& w) {
    Item item;
    const TruthTable f = TruthTable::fromWord(4, code);
    const std::string input = formatFunction(f);
    const Certificate cert = w.synth.synthesize(f);
    const VerificationResult vr = verifyCertificate(cert);
    item.checks.expect(vr.ok, [&] { return SuiteFailure{input, "certificate verifies", joined(vr.problems)}; });
    item.andIsomorphic = f.popcount() == 1 || f.popcount() == 15;
    item.cost = cert.claimedQueries;
    item.level = cert.level;
    item.checks.expect(item.andIsomorphic ? item.cost == 4 : item.cost <= 3, [&] {
      return SuiteFailure{input, item.andIsomorphic ? "4 queries" : "at most 3 queries", str(item.cost)};
    });
    const unsigned deg = degree(f);
    item.checks.expect(ceilHalf(deg) <= item.cost, [&] {
      return SuiteFailure{input, "at least ceil(deg/2) = " + str(ceilHalf(deg)) + " queries", str(item.cost)};
    });
    if (isMonotone(f)) {
      const bool extreme = f == and4 || f == or4;
      item.checks.expect((item.cost == 4) == extreme, [&] {
        return SuiteFailure{input, extreme ? "monotone AND/OR: 4 queries" : "monotone: at most 3 queries",
                            str(item.cost)};
      });
    }
    item.canonical = npnCanonical(f).table.asWord();
    return item;
  });

  std::uint64_t andIso = 0;
  std::map<unsigned, std::uint64_t> costs;
  std::map<Level, std::uint64_t> levels;
  std::set<std::uint64_t> classes;
  for (auto& item : results) {
    andIso += item.andIsomorphic && item.cost == 4;
    ++costs[item.cost];
    ++levels[item.level];
    classes.insert(item.canonical);
    c.absorb(std::move(item.checks));
  }
  c.expect(andIso == 32, [&] { return SuiteFailure{"AND-isomorphic functions at 4 queries", "32", str(andIso)}; });
  c.expect(classes.size() == kNpnClasses4,
           [&] { return SuiteFailure{"NPN classes", str(kNpnClasses4), str(classes.size())}; });
  Json costJson = Json::object();
  for (auto [q, count] : costs) costJson[str(q)] = count;
  Json levelJson = Json::object();
  for (Level l : {Level::FullySimulated, Level::CountCertified, Level::ClassicalOnly}) {
    levelJson[levelName(l)] = levels[l];
  }
  r.metrics["andIsomorphic"] = andIso;
  r.metrics["npnClasses"] = classes.size();
  r.metrics["costHistogram"] = costJson;
  r.metrics["levels"] = levelJson;
  return r;
}

// monotone -----------------------------------------------------------------------------

/// Monotone functions of n variables: f = f0 on x_n = 0 and f1 on x_n = 1,
/// with f0 <= f1 both monotone in the remaining variables.
std::vector<TruthTable> monotoneFunctions(unsigned n) {
  std::vector<TruthTable> current = {TruthTable::constant(0, false), TruthTable::constant(0, true)};
  for (unsigned k = 1; k <= n; ++k) {
    std::vector<TruthTable> next;
    for (const auto& f0 : current) {
      for (const auto& f1 : current) {
        if ((f0 & ~f1).isZero()) next.push_back(combineCofactors(f0, f1, k - 1));
      }
    }
    current = std::move(next);
  }
  return current;
}

constexpr std::uint64_t kDedekind[] = {2, 3, 6, 20, 168, 7581};

SuiteReport monotone(unsigned maxN, Checks& c) {
  SuiteReport r;
  r.population = "all monotone functions for n = 2.." + str(maxN);
  Synthesizer synth;
  Json perN = Json::object();
  for (unsigned n = 2; n <= maxN; ++n) {
    const auto functions = monotoneFunctions(n);
    c.expect(functions.size() == kDedekind[n], [&] {
      return SuiteFailure{"monotone functions of arity " + str(n), str(kDedekind[n]), str(functions.size())};
    });
    const TruthTable andN = andTable(n);
    const TruthTable orN = orTable(n);
    std::uint64_t full = 0;
    for (const auto& f : functions) {
      const std::string input = formatFunction(f);
      Checks item;
      item.expect(isMonotone(f), [&] { return SuiteFailure{input, "monotone", "not monotone"}; });
      const Certificate cert = synth.synthesize(f);
      const VerificationResult vr = verifyCertificate(cert);
      item.expect(vr.ok, [&] { return SuiteFailure{input, "certificate verifies", joined(vr.problems)}; });
      const bool extreme = f == andN || f == orN;
      item.expect((cert.claimedQueries == n) == extreme, [&] {
        return SuiteFailure{input, extreme ? str(n) + " queries" : "at most " + str(n - 1) + " queries",
                            str(cert.claimedQueries)};
      });
      c.absorb(std::move(item));
      full += cert.claimedQueries == n;
    }
    perN[str(n)] = Json{{"functions", functions.size()}, {"costN", full}};
  }
  r.metrics["perArity"] = perN;
  return r;
}

// structural-lemmas --------------------------------------------------------------------

struct LemmaTally {
  std::map<std::string, std::uint64_t> premises;
};

std::string lemmaInput(const char* lemma, const TruthTable& f, const std::string& detail = "") {
  return std::string(lemma) + " " + formatFunction(f) + (detail.empty() ? "" : " " + detail);
}

void checkLm8(const TruthTable& f, const AndOrbit& orbit, Checks& c,
              LemmaTally& t) {
  const std::uint64_t ones = f.popcount();
  const bool premise = ones >= 2 && ones + 2 <= f.size();
  const bool inOrbit = orbit.contains(f);
  if (premise) {
    ++t.premises["lm-8"];
    c.expect(!inOrbit, [&] { return SuiteFailure{lemmaInput("lm-8", f), "not AND-isomorphic", "AND-isomorphic"}; });
  } else if (ones == 1 || ones + 1 == f.size()) {
    c.expect(inOrbit, [&] {
      return SuiteFailure{lemmaInput("lm-8", f), "single 1 or single 0 is AND-isomorphic", "outside the orbit"};
    });
  }
}

void checkAndOr(const TruthTable& f, Checks& c, LemmaTally& t) {
  const unsigned n = f.arity();
  for (Var i = 0; i < n; ++i) {
    for (bool b : {false, true}) {
      const TruthTable hi = restrict(f, i, b);
      const bool isAnd = andForm(hi);
      if (!isAnd && !orForm(hi)) continue;
      for (Var j = 0; j < n; ++j) {
        if (j == i) continue;
        for (bool cv : {false, true}) {
          ++t.premises["Lm-and-or"];
          const TruthTable hj = restrict(f, j, cv);
          const bool clash = isAnd ? orForm(hj) : andForm(hj);
          c.expect(!clash, [&] {
            const std::string detail = "i=" + str(i + 1) + " b=" + str(b) + " j=" + str(j + 1) + " c=" + str(cv);
            return SuiteFailure{lemmaInput("Lm-and-or", f, detail),
                                isAnd ? "f_{x_j=c} not an OR form" : "f_{x_j=c} not an AND form",
                                isAnd ? "OR form" : "AND form"};
          });
        }
      }
    }
  }
}

bool lm7Premise(const TruthTable& f) {
  for (Var i = 0; i < f.arity(); ++i) {
    if (!orForm(restrict(f, i, false))) return false;
  }
  return true;
}

/// Ordered triples (a, b, c) stand in for (x_1, x_2, x_3) of the statement.
void checkLm7(const TruthTable& f, Checks& c, LemmaTally& t) {
  const unsigned n = f.arity();
  if (n < 3 || !lm7Premise(f)) return;
  ++t.premises["lm-7 functions"];
  for (Var a = 0; a < n; ++a) {
    const TruthTable fa = restrict(f, a, false);
    for (Var b = 0; b < n; ++b) {
      for (Var cc = 0; cc < n; ++cc) {
        if (b == a || cc == a || cc == b) continue;
        if (!positiveInOr(fa, afterDrop(b, a)) || positiveInOr(fa, afterDrop(cc, a))) continue;
        ++t.premises["lm-7"];
        const TruthTable fb = restrict(f, b, false);
        const TruthTable fc = restrict(f, cc, false);
        const bool first = positiveInOr(fb, afterDrop(a, b)) && !positiveInOr(fb, afterDrop(cc, b));
        const bool second = !positiveInOr(fc, afterDrop(a, cc)) && !positiveInOr(fc, afterDrop(b, cc));
        const std::string detail = "(" + str(a + 1) + "," + str(b + 1) + "," + str(cc + 1) + ")";
        c.expect(first, [&] {
          return SuiteFailure{lemmaInput("lm-7", f, detail), "f_{x_b=0} = OR(x_a, ~x_c, ...)", "other literals"};
        });
        c.expect(second, [&] {
          return SuiteFailure{lemmaInput("lm-7", f, detail), "f_{x_c=0} = OR(~x_a, ~x_b, ...)", "other literals"};
        });
      }
    }
  }
}

unsigned c71Witnesses(const TruthTable& f, InputCode* first) {
  const unsigned n = f.arity();
  unsigned count = 0;
  for (InputCode b = 0; b < (InputCode{1} << n); ++b) {
    bool all = true;
    for (Var i = 0; i < n && all; ++i) all = andIsomorphicForm(restrict(f, i, (b >> i) & 1u));
    if (all) {
      if (count == 0 && first) *first = b;
      ++count;
    }
  }
  return count;
}

std::string bitString(InputCode b, unsigned n) {
  std::string s;
  for (Var i = 0; i < n; ++i) s += ((b >> i) & 1u) ? '1' : '0';
  return s;
}

void checkC71(const TruthTable& f, Checks& c, LemmaTally& t) {
  ++t.premises["Lm-c7-1"];
  InputCode b = 0;
  const unsigned count = c71Witnesses(f, &b);
  c.expect(count == 1, [&] { return SuiteFailure{lemmaInput("Lm-c7-1", f), "exactly one witness b", str(count)}; });
}

void checkC6l1(const TruthTable& f, Synthesizer& synth, Checks& c, LemmaTally& t) {
  const unsigned n = f.arity();
  std::optional<unsigned> cost;
  for (Var i = 0; i < n; ++i) {
    const unsigned c0 = synth.cost(restrict(f, i, false));
    const unsigned c1 = synth.cost(restrict(f, i, true));
    if (c0 + 1 >= n || c1 + 1 >= n) continue;
    ++t.premises["C6-l1"];
    if (!cost) cost = synth.cost(f);
    c.expect(*cost < n, [&] {
      return SuiteFailure{lemmaInput("C6-l1", f, "i=" + str(i + 1)), "fewer than " + str(n) + " queries",
                          str(*cost)};
    });
  }
}

bool lmBothPremise(const TruthTable& f, Var* witness) {
  for (Var i = 0; i < f.arity(); ++i) {
    if (andIsomorphicForm(restrict(f, i, false)) && andIsomorphicForm(restrict(f, i, true))) {
      if (witness) *witness = i;
      return true;
    }
  }
  return false;
}

void checkLmBoth(const TruthTable& f, Synthesizer& synth, Checks& c, LemmaTally& t) {
  Var i = 0;
  if (!lmBothPremise(f, &i)) return;
  ++t.premises["Lm-both"];
  const unsigned cost = synth.cost(f);
  c.expect(cost < f.arity(), [&] {
    return SuiteFailure{lemmaInput("Lm-both", f, "i=" + str(i + 1)), "fewer than " + str(f.arity()) + " queries",
                        str(cost)};
  });
}

/// Set partitions of {0..n-1} as block lists.
void setPartitions(unsigned n, std::vector<std::vector<std::uint64_t>>& out, std::vector<std::uint64_t>& blocks,
                   unsigned next = 0) {
  if (next == n) {
    out.push_back(blocks);
    return;
  }
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    blocks[k] |= std::uint64_t{1} << next;
    setPartitions(n, out, blocks, next + 1);
    blocks[k] &= ~(std::uint64_t{1} << next);
  }
  blocks.push_back(std::uint64_t{1} << next);
  setPartitions(n, out, blocks, next + 1);
  blocks.pop_back();
}

/// Functions whose every f_{x_i=0} is an OR form: the zeros below the
/// all-ones point have zero sets partitioning the variables.
std::vector<TruthTable> lm7Population(unsigned n) {
  std::vector<std::vector<std::uint64_t>> partitions;
  std::vector<std::uint64_t> blocks;
  setPartitions(n, partitions, blocks);
  const InputCode full = (InputCode{1} << n) - 1;
  std::vector<TruthTable> out;
  for (const auto& p : partitions) {
    for (bool topZero : {false, true}) {
      TruthTable f = TruthTable::constant(n, true);
      for (std::uint64_t block : p) f.set(full & ~block, false);
      if (topZero) f.set(full, false);
      out.push_back(f);
    }
  }
  return out;
}

constexpr std::size_t kLemmaSamples = 100000;

SuiteReport structuralLemmas(const SuiteOptions& o, Checks& c) {
  SuiteReport r;
  r.population = "n = 4 exhaustive; n = 5: " + str(kLemmaSamples) + " uniform tables, " + str(kLemmaSamples) +
                 " tables built to meet the Lm-and-or premise, all lm-7, Lm-c7-1 and Lm-both premise functions";
  LemmaTally tally;
  const AndOrbit orbit4(4);
  const AndOrbit orbit5(5);

  // n = 4, every table.
  struct Item {
    Checks checks;
    LemmaTally tally;
    bool lm7 = false;
  };
  auto exhaustive = parallelMap<Item>(65536, o.jobs, [&](std::size_t code, Worker& w) {
    Item item;
    const TruthTable f = TruthTable::fromWord(4, code);
    checkLm8(f, orbit4, item.checks, item.tally);
    checkAndOr(f, item.checks, item.tally);
    item.lm7 = lm7Premise(f);
    checkLm7(f, item.checks, item.tally);
    if (orbit4.contains(f)) checkC71(f, item.checks, item.tally);
    checkC6l1(f, w.synth, item.checks, item.tally);
    checkLmBoth(f, w.synth, item.checks, item.tally);
    return item;
  });
  std::vector<std::uint64_t> lm7At4;
  for (std::size_t code = 0; code < exhaustive.size(); ++code) {
    Item& item = exhaustive[code];
    for (auto& [k, v] : item.tally.premises) tally.premises[k + " n=4"] += v;
    if (item.lm7) lm7At4.push_back(code);
    c.absorb(std::move(item.checks));
  }
  // Bell(4) partitions, with and without a zero at the all-ones point.
  c.expect(lm7At4.size() == 30,
           [&] { return SuiteFailure{"lm-7 premise functions at n=4", "30", str(lm7At4.size())}; });
  {
    std::vector<std::uint64_t> generated;
    for (const auto& f : lm7Population(4)) generated.push_back(f.asWord());
    std::sort(generated.begin(), generated.end());
    c.expect(generated == lm7At4, [&] {
      return SuiteFailure{"lm-7 generated population at n=4", "the exhaustive premise set",
                          str(generated.size()) + " different tables"};
    });
  }

  const TruthTable or4 = orTable(4);
  InputCode b = 0;
  const unsigned count = c71Witnesses(or4, &b);
  c.expect(count == 1 && b == 0, [&] {
    return SuiteFailure{lemmaInput("Lm-c7-1", or4), "unique witness 0000",
                        count == 1 ? bitString(b, 4) : str(count) + " witnesses"};
  });

  // n = 5.
  Synthesizer synth;
  LemmaTally t5;
  for (const auto& f : orbit5.sorted) {
    Checks item;
    checkC71(f, item, t5);
    c.absorb(std::move(item));
  }
  for (const auto& f : lm7Population(5)) {
    Checks item;
    item.expect(lm7Premise(f), [&] { return SuiteFailure{lemmaInput("lm-7", f), "premise holds", "premise fails"}; });
    checkLm7(f, item, t5);
    c.absorb(std::move(item));
  }
  for (Var i = 0; i < 5; ++i) {
    for (const auto& g0 : orbit4.sorted) {
      for (const auto& g1 : orbit4.sorted) {
        const TruthTable f = combineCofactors(g0, g1, i);
        Checks item;
        item.expect(lmBothPremise(f, nullptr),
                    [&] { return SuiteFailure{lemmaInput("Lm-both", f), "premise holds", "premise fails"}; });
        checkLmBoth(f, synth, item, t5);
        c.absorb(std::move(item));
      }
    }
  }

  std::mt19937_64 rng(o.seed);
  std::vector<TruthTable> uniform;
  std::vector<TruthTable> built;
  for (std::size_t s = 0; s < kLemmaSamples; ++s) uniform.push_back(randomTable(5, rng));
  for (std::size_t s = 0; s < kLemmaSamples; ++s) {
    const Var i = static_cast<Var>(rng() % 5);
    const bool side = rng() & 1u;
    const InputCode point = rng() % 16;
    TruthTable h = TruthTable::constant(4, false);
    h.set(point, true);
    if (rng() & 1u) h = ~h;
    TruthTable other = randomTable(4, rng);
    built.push_back(side ? combineCofactors(other, h, i) : combineCofactors(h, other, i));
  }
  struct SampleItem {
    Checks checks;
    LemmaTally tally;
  };
  auto sampled = parallelMap<SampleItem>(2 * kLemmaSamples, o.jobs, [&](std::size_t idx, Worker& w) {
    SampleItem item;
    const bool isBuilt = idx >= kLemmaSamples;
    const TruthTable& f = isBuilt ? built[idx - kLemmaSamples] : uniform[idx];
    checkAndOr(f, item.checks, item.tally);
    if (isBuilt) return item;
    checkLm8(f, orbit5, item.checks, item.tally);
    checkLm7(f, item.checks, item.tally);
    if (orbit5.contains(f)) checkC71(f, item.checks, item.tally);
    checkC6l1(f, w.synth, item.checks, item.tally);
    checkLmBoth(f, w.synth, item.checks, item.tally);
    return item;
  });
  for (auto& item : sampled) {
    for (auto& [k, v] : item.tally.premises) t5.premises[k] += v;
    c.absorb(std::move(item.checks));
  }
  for (auto& [k, v] : t5.premises) tally.premises[k + " n=5"] += v;

  // Every lemma must have met its premise somewhere.
  for (const char* lemma : {"lm-8", "Lm-and-or", "lm-7", "Lm-c7-1", "C6-l1", "Lm-both"}) {
    for (const char* n : {" n=4", " n=5"}) {
      const std::string key = std::string(lemma) + n;
      c.expect(tally.premises[key] > 0, [&] { return SuiteFailure{key, "non-empty premise population", "0"}; });
    }
  }
  Json premises = Json::object();
  for (auto& [k, v] : tally.premises) premises[k] = v;
  r.metrics["premiseCounts"] = premises;
  return r;
}

// corollary ---------------------------------------------------------------------------

/// Tables of arity n with exactly one 1 or exactly one 0, counted over every table.
std::uint64_t countSingletons(unsigned n, unsigned jobs) {
  const unsigned size = 1u << n;
  if (n <= 4) {
    std::uint64_t count = 0;
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << size); ++w) {
      const int pc = std::popcount(w);
      count += pc == 1 || static_cast<unsigned>(pc) + 1 == size;
    }
    return count;
  }
  // Split each table word into a high and a low half and count, for every
  // high half, the low halves giving a total popcount of 1 or size-1.
  const unsigned half = size / 2;
  std::vector<std::uint64_t> histogram(half + 1, 0);
  for (std::uint64_t low = 0; low < (std::uint64_t{1} << half); ++low) ++histogram[std::popcount(low)];
  const std::uint64_t highs = std::uint64_t{1} << half;
  const unsigned chunks = std::max(1u, jobs);
  auto partial = parallelMap<std::uint64_t>(chunks, jobs, [&](std::size_t chunk, Worker&) {
    std::uint64_t count = 0;
    for (std::uint64_t high = chunk; high < highs; high += chunks) {
      const unsigned ph = static_cast<unsigned>(std::popcount(high));
      for (unsigned target : {1u, size - 1}) {
        if (target >= ph && target - ph <= half) count += histogram[target - ph];
      }
    }
    return count;
  });
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

SuiteReport corollary(const SuiteOptions& o, unsigned maxN, Checks& c) {
  SuiteReport r;
  r.population = "every truth table for n = 2.." + str(maxN);
  Json counts = Json::object();
  double previous = 1.0;
  for (unsigned n = 2; n <= maxN; ++n) {
    const std::uint64_t count = countSingletons(n, o.jobs);
    const std::uint64_t expected = std::uint64_t{2} << n;
    Checks item;
    item.expect(count == expected, [&] { return SuiteFailure{"n=" + str(n), str(expected), str(count)}; });
    if (n <= 4) {
      const TruthTable canon = npnCanonical(andTable(n)).table;
      auto flags = parallelMap<char>(std::size_t{1} << (1u << n), o.jobs, [&](std::size_t w, Worker&) {
        return static_cast<char>(npnCanonical(TruthTable::fromWord(n, w)).table == canon);
      });
      const auto byCanon = static_cast<std::uint64_t>(std::count(flags.begin(), flags.end(), 1));
      item.expect(byCanon == count,
                  [&] { return SuiteFailure{"n=" + str(n) + " canonical-form count", str(count), str(byCanon)}; });
    }
    const double fraction = std::ldexp(static_cast<double>(expected), -static_cast<int>(1u << n));
    item.expect(fraction < previous, [&] {
      return SuiteFailure{"fraction at n=" + str(n), "below the value at n-1", std::to_string(fraction)};
    });
    c.absorb(std::move(item));
    previous = fraction;
    counts[str(n)] = Json{{"andIsomorphic", count}, {"fraction", fraction}};
  }
  r.metrics["perArity"] = counts;
  return r;
}

// primitives ---------------------------------------------------------------------------

SuiteReport primitives(unsigned maxN, Checks& c) {
  SuiteReport r;
  r.population = "parity and NAE programs for n <= " + str(maxN) + ", XOR gadgets on every pair for n <= " +
                 str(std::min(maxN, 6u)) + ", the 2-query agree-or block under every negation";
  double worst = 0.0;
  auto checkProgram = [&](const std::string& name, const NodePtr& p, const TruthTable& f, unsigned queries) {
    const SimulationReport rep = simulate(p, f);
    worst = std::max(worst, rep.worstWrongAmplitude);
    Checks item;
    item.expect(rep.exact && rep.worstWrongAmplitude <= kEpsilon, [&] {
      return SuiteFailure{name, "exact", std::to_string(rep.failingInputs.size()) + " failing inputs"};
    });
    item.expect(queryCost(p) == queries && rep.queriesUsedWorstCase == queries, [&] {
      return SuiteFailure{name, str(queries) + " queries",
                          str(queryCost(p)) + " static, " + str(rep.queriesUsedWorstCase) + " simulated"};
    });
    c.absorb(std::move(item));
  };
  for (unsigned n = 1; n <= maxN; ++n) {
    const TruthTable parity = TruthTable::fromPredicate(n, [](InputCode x) { return std::popcount(x) % 2 == 1; });
    checkProgram("parityProgram(" + str(n) + ")", parityProgram(n), parity, ceilHalf(n));
  }
  for (unsigned n = 2; n <= maxN; ++n) {
    const InputCode full = (InputCode{1} << n) - 1;
    const TruthTable nae = TruthTable::fromPredicate(n, [&](InputCode x) { return x != 0 && x != full; });
    checkProgram("naeProgram(" + str(n) + ")", naeProgram(n), nae, n - 1);
  }
  for (unsigned n = 2; n <= std::min(maxN, 6u); ++n) {
    for (Var i = 0; i < n; ++i) {
      for (Var j = 0; j < n; ++j) {
        if (i == j) continue;
        const TruthTable target =
            TruthTable::fromPredicate(n, [&](InputCode x) { return (((x >> i) ^ (x >> j)) & 1u) != 0; });
        const std::string name = "xorGadget(" + str(i + 1) + "," + str(j + 1) + ") n=" + str(n);
        checkProgram(name, xorGadget(i, j, output(false), output(true)), target, 1);
        const SimulationReport rep = simulate(elaborate(xorQuery(i, j, output(false), output(true))), target);
        c.expect(rep.exact, [&] { return SuiteFailure{name + " via xorQuery", "exact", "inexact"}; });
      }
    }
  }
  for (std::uint64_t neg = 0; neg < 8; ++neg) {
    for (bool invert : {false, true}) {
      const TruthTable target = TruthTable::fromPredicate(3, [&](InputCode x) {
        const bool a = (x ^ neg) & 1u, b = ((x ^ neg) >> 1) & 1u, cc = ((x ^ neg) >> 2) & 1u;
        return ((a == b) && (a || cc)) != invert;
      });
      checkProgram("agreeOrProgram neg=" + str(neg) + " invert=" + str(invert), agreeOrProgram({0, 1, 2}, neg, invert),
                   target, 2);
    }
  }
  r.metrics["worstWrongAmplitude"] = worst;
  return r;
}

// npn-census ---------------------------------------------------------------------------

constexpr std::uint64_t kNpnClassCounts[] = {1, 2, 4, 14, 222, 616126};

std::uint64_t tableMask(unsigned n) {
  const unsigned size = 1u << n;
  return size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
}

/// x_v -> ~x_v on a packed table.
std::uint64_t negateWord(std::uint64_t w, unsigned n, Var v) {
  std::uint64_t out = 0;
  for (InputCode m = 0; m < (InputCode{1} << n); ++m) out |= ((w >> (m ^ (InputCode{1} << v))) & 1u) << m;
  return out;
}

/// Exchange x_v and x_{v+1} on a packed table.
std::uint64_t swapWord(std::uint64_t w, unsigned n, Var v) {
  std::uint64_t out = 0;
  for (InputCode m = 0; m < (InputCode{1} << n); ++m) {
    const InputCode a = (m >> v) & 1u, b = (m >> (v + 1)) & 1u;
    const InputCode src = (m & ~(InputCode{3} << v)) | (a << (v + 1)) | (b << v);
    out |= ((w >> src) & 1u) << m;
  }
  return out;
}

/// Orbit count by flood fill over the generators; independent of npnCanonical.
std::uint64_t orbitCount(unsigned n) {
  const std::uint64_t total = std::uint64_t{1} << (1u << n);
  const std::uint64_t mask = tableMask(n);
  std::vector<bool> seen(total, false);
  std::uint64_t orbits = 0;
  std::vector<std::uint64_t> stack;
  for (std::uint64_t w = 0; w < total; ++w) {
    if (seen[w]) continue;
    ++orbits;
    seen[w] = true;
    stack.push_back(w);
    while (!stack.empty()) {
      const std::uint64_t cur = stack.back();
      stack.pop_back();
      std::vector<std::uint64_t> next = {~cur & mask};
      for (Var v = 0; v < n; ++v) next.push_back(negateWord(cur, n, v));
      for (Var v = 0; v + 1 < n; ++v) next.push_back(swapWord(cur, n, v));
      for (std::uint64_t x : next) {
        if (!seen[x]) {
          seen[x] = true;
          stack.push_back(x);
        }
      }
    }
  }
  return orbits;
}

SuiteReport npnCensus(const SuiteOptions& o, unsigned maxN, Checks& c) {
  SuiteReport r;
  r.population = "every truth table for n = 0.." + str(maxN);
  Json perN = Json::object();
  for (unsigned n = 0; n <= maxN; ++n) {
    const std::size_t total = std::size_t{1} << (1u << n);
    auto canon = parallelMap<std::uint64_t>(total, o.jobs, [&](std::size_t w, Worker&) {
      return npnCanonical(TruthTable::fromWord(n, w)).table.asWord();
    });
    std::sort(canon.begin(), canon.end());
    const auto classes = static_cast<std::uint64_t>(std::unique(canon.begin(), canon.end()) - canon.begin());
    const std::uint64_t oracle = orbitCount(n);
    Checks item;
    item.expect(classes == oracle, [&] { return SuiteFailure{"n=" + str(n), str(oracle) + " orbits", str(classes)}; });
    item.expect(classes == kNpnClassCounts[n],
                [&] { return SuiteFailure{"n=" + str(n), str(kNpnClassCounts[n]) + " classes", str(classes)}; });
    c.absorb(std::move(item));
    perN[str(n)] = Json{{"classes", classes}, {"orbits", oracle}};
  }
  r.metrics["perArity"] = perN;
  return r;
}

// npn5-classes (opt-in) ------------------------------------------------------------------

/// One synthesis per NPN class at n = 5. Classes are found by flood fill over
/// a 2^32-bit visited map; the smallest member represents each class.
SuiteReport npn5Classes(const SuiteOptions& o, Checks& c) {
  SuiteReport r;
  r.population = "one representative of every NPN class of 5-bit functions";
  constexpr unsigned n = 5;
  const std::uint64_t total = std::uint64_t{1} << 32;
  std::vector<std::uint64_t> seen(total / 64, 0);
  auto test = [&](std::uint64_t w) { return (seen[w >> 6] >> (w & 63)) & 1u; };
  auto mark = [&](std::uint64_t w) { seen[w >> 6] |= std::uint64_t{1} << (w & 63); };

  // Bit-parallel generators on a 32-entry table.
  constexpr std::uint64_t kVarMask[5] = {0x55555555, 0x33333333, 0x0f0f0f0f, 0x00ff00ff, 0x0000ffff};
  auto negate = [&](std::uint64_t w, unsigned v) {
    const unsigned s = 1u << v;
    return ((w & kVarMask[v]) << s) | ((w >> s) & kVarMask[v]);
  };
  auto swapAdjacent = [&](std::uint64_t w, unsigned v) {
    // Entries with x_v = 1, x_{v+1} = 0 trade places with x_v = 0, x_{v+1} = 1.
    const unsigned s = 1u << v;
    const std::uint64_t keep = (kVarMask[v] & kVarMask[v + 1]) | (~kVarMask[v] & ~kVarMask[v + 1] & 0xffffffff);
    const std::uint64_t up = w & ~kVarMask[v] & kVarMask[v + 1];   // x_v = 1, x_{v+1} = 0
    const std::uint64_t down = w & kVarMask[v] & ~kVarMask[v + 1]; // x_v = 0, x_{v+1} = 1
    return (w & keep) | (up << s) | (down >> s);
  };

  std::vector<std::uint64_t> reps;
  std::vector<std::uint64_t> stack;
  for (std::uint64_t w = 0; w < total; ++w) {
    if (test(w)) continue;
    reps.push_back(w);
    mark(w);
    stack.push_back(w);
    while (!stack.empty()) {
      const std::uint64_t cur = stack.back();
      stack.pop_back();
      std::uint64_t next[10];
      unsigned k = 0;
      next[k++] = ~cur & 0xffffffffull;
      for (unsigned v = 0; v < n; ++v) next[k++] = negate(cur, v);
      for (unsigned v = 0; v + 1 < n; ++v) next[k++] = swapAdjacent(cur, v);
      for (unsigned t = 0; t < k; ++t) {
        if (!test(next[t])) {
          mark(next[t]);
          stack.push_back(next[t]);
        }
      }
    }
  }
  seen.clear();
  seen.shrink_to_fit();
  c.expect(reps.size() == kNpnClassCounts[5],
           [&] { return SuiteFailure{"NPN classes at n=5", str(kNpnClassCounts[5]), str(reps.size())}; });

  struct Item {
    Checks checks;
    unsigned cost = 0;
  };
  auto results = parallelMap<Item>(reps.size(), o.jobs, [&](std::size_t i, Worker& w) {
    Item item;
    if (w.synth.memoSize() > 2000000) w.synth = Synthesizer();
    const TruthTable f = TruthTable::fromWord(n, reps[i]);
    const Certificate cert = w.synth.synthesize(f);
    const bool andIso = f.popcount() == 1 || f.popcount() == 31;
    item.cost = cert.claimedQueries;
    item.checks.expect(andIso ? item.cost == 5 : item.cost <= 4, [&] {
      return SuiteFailure{formatFunction(f), andIso ? "5 queries" : "at most 4 queries", str(item.cost)};
    });
    return item;
  });
  std::map<unsigned, std::uint64_t> costs;
  for (auto& item : results) {
    ++costs[item.cost];
    c.absorb(std::move(item.checks));
  }
  Json costJson = Json::object();
  for (auto [q, count] : costs) costJson[str(q)] = count;
  r.metrics["classes"] = reps.size();
  r.metrics["costHistogram"] = costJson;
  return r;
}

// registry --------------------------------------------------------------------------------

struct SuiteSpec {
  std::string id;
  unsigned defaultMaxN;
  unsigned boundMaxN;
  bool inDefault;
  std::function<SuiteReport(const SuiteOptions&, unsigned, Checks&)> run;
};

const std::vector<SuiteSpec>& registry() {
  static const std::vector<SuiteSpec> kSuites = {
      {"theorem1", 10, 10, true, [](const SuiteOptions&, unsigned m, Checks& c) { return theorem1(m, c); }},
      {"classical-depth", 12, 12, true, classicalDepth},
      {"lemma1", 10, 10, true, lemma1},
      {"theorem6", 4, 4, true, [](const SuiteOptions& o, unsigned, Checks& c) { return theorem6(o, c); }},
      {"monotone", 4, 5, true, [](const SuiteOptions&, unsigned m, Checks& c) { return monotone(m, c); }},
      {"structural-lemmas", 5, 5, true,
       [](const SuiteOptions& o, unsigned, Checks& c) { return structuralLemmas(o, c); }},
      {"corollary", 5, 5, true, corollary},
      {"primitives", 12, 12, true, [](const SuiteOptions&, unsigned m, Checks& c) { return primitives(m, c); }},
      {"npn-census", 4, 4, true, npnCensus},
      {"npn5-classes", 5, 5, false, [](const SuiteOptions& o, unsigned, Checks& c) { return npn5Classes(o, c); }},
  };
  return kSuites;
}

}  // namespace

std::vector<std::string> suiteIds() {
  std::vector<std::string> out;
  for (const auto& s : registry()) out.push_back(s.id);
  return out;
}

std::vector<SuiteInfo> suiteInfo() {
  std::vector<SuiteInfo> out;
  for (const auto& s : registry()) out.push_back({s.id, s.defaultMaxN, s.boundMaxN, s.inDefault});
  return out;
}

std::vector<std::string> defaultSuiteIds() {
  std::vector<std::string> out;
  for (const auto& s : registry()) {
    if (s.inDefault) out.push_back(s.id);
  }
  return out;
}

SuiteReport runSuite(const std::string& id, const SuiteOptions& options) {
  const auto& suites = registry();
  const auto it = std::find_if(suites.begin(), suites.end(), [&](const SuiteSpec& s) { return s.id == id; });
  if (it == suites.end()) throw std::invalid_argument("unknown suite '" + id + "'");
  const unsigned maxN = options.maxN.value_or(it->defaultMaxN);
  if (maxN > it->boundMaxN) {
    throw std::out_of_range("suite " + id + " supports max-n <= " + std::to_string(it->boundMaxN));
  }
  const auto start = std::chrono::steady_clock::now();
  Checks checks;
  SuiteReport report = it->run(options, maxN, checks);
  report.wallTime = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.suiteId = id;
  report.checked = checks.checked();
  report.failures = std::move(checks.failures());
  report.failed = checks.failed();
  report.passed = report.checked - report.failed;
  return report;
}

nlohmann::ordered_json reportToJson(const SuiteReport& report) {
  Json failures = Json::array();
  for (const auto& f : report.failures) failures.push_back(Json{{"input", f.input}, {"expected", f.expected}, {"got", f.got}});
  return Json{{"suiteId", report.suiteId},
              {"population", report.population},
              {"checked", report.checked},
              {"passed", report.passed},
              {"failed", report.failed},
              {"failures", failures},
              {"metrics", report.metrics},
              {"wallTime", report.wallTime}};
}

nlohmann::ordered_json reportsToJson(const std::vector<SuiteReport>& reports) {
  Json list = Json::array();
  bool ok = true;
  for (const auto& r : reports) {
    list.push_back(reportToJson(r));
    ok &= r.ok();
  }
  return Json{{"schema", kReportSchema}, {"ok", ok}, {"reports", list}};
}

std::string reportToHuman(const SuiteReport& report) {
  std::ostringstream out;
  out << (report.ok() ? "PASS " : "FAIL ") << report.suiteId << ": " << report.passed << "/" << report.checked
      << " checks passed, " << report.failed << " failed (" << std::fixed << std::setprecision(2) << report.wallTime
      << " s)\n";
  out << "  population: " << report.population << "\n";
  for (const auto& [key, value] : report.metrics.items()) out << "  " << key << ": " << value.dump() << "\n";
  for (const auto& f : report.failures) {
    out << "  failure: " << f.input << " | expected " << f.expected << " | got " << f.got << "\n";
  }
  return out.str();
}

}  // namespace exactq
