// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Pass --stretch to also run the 5-bit NPN class sweep (reported, never fatal).

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "exactq/exactq.h"

namespace {

using Json = nlohmann::json;

struct Verdict {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

struct Suite {
  bool ran = false;
  Json report;
  std::string error;
};

Suite runSuite(const std::string& id, int maxN, unsigned jobs = 1) {
  Suite s;
  int allOk = 0;
  char* text = nullptr;
  const exq_status st = exq_run_suites(id.c_str(), maxN, 1, jobs, &allOk, &text);
  if (st != EXQ_OK) {
    s.error = std::string(exq_status_name(st)) + ": " + exq_last_error();
    return s;
  }
  s.ran = true;
  s.report = Json::parse(text).at("reports").at(0);
  exq_string_free(text);
  return s;
}

// Shared checks for every suite-backed criterion.
void requireClean(Verdict& v, const Suite& s) {
  if (!s.ran) {
    v.require(false, "suite did not run: " + s.error);
    return;
  }
  const auto& r = s.report;
  v.require(r.at("failed").get<std::uint64_t>() == 0,
            std::to_string(r.at("failed").get<std::uint64_t>()) + " failed checks in " + r.at("suiteId").get<std::string>());
  v.require(r.at("checked").get<std::uint64_t>() > 0, "suite checked nothing");
  for (const auto& f : r.at("failures")) {
    if (v.notes.size() > 6) break;
    v.notes.push_back(f.at("input").get<std::string>() + ": expected " + f.at("expected").get<std::string>() +
                      ", got " + f.at("got").get<std::string>());
  }
}

std::string profileText(const std::vector<int>& bits) {
  std::string s = "profile:";
  for (std::size_t i = 0; i < bits.size(); ++i) s += (i ? "," : "") + std::to_string(bits[i]);
  return s;
}

struct Synth {
  bool ok = false;
  unsigned queries = 0;
  bool andIsomorphic = false;
  std::string error;
};

Synth synthProfile(const std::vector<int>& bits) {
  Synth out;
  exq_function* f = nullptr;
  if (exq_function_parse(profileText(bits).c_str(), &f) != EXQ_OK) {
    out.error = exq_last_error();
    return out;
  }
  exq_certificate* c = nullptr;
  char* analysis = nullptr;
  if (exq_synthesize(f, &c) == EXQ_OK && exq_analyze(f, &analysis) == EXQ_OK) {
    int verified = 0;
    exq_certificate_verify(c, &verified, nullptr);
    out.ok = verified == 1;
    out.queries = exq_certificate_queries(c);
    out.andIsomorphic = Json::parse(analysis).at("andIsomorphic").get<bool>();
  } else {
    out.error = exq_last_error();
  }
  exq_string_free(analysis);
  exq_certificate_free(c);
  exq_function_free(f);
  return out;
}

Verdict ac1(std::string& detail) {
  Verdict v;
  const Suite s = runSuite("theorem6", 4);
  requireClean(v, s);
  if (!s.ran) return v;
  const auto& m = s.report.at("metrics");
  const auto& hist = m.at("costHistogram");
  std::uint64_t total = 0;
  for (const auto& [q, count] : hist.items()) {
    total += count.get<std::uint64_t>();
    v.require(std::stoi(q) <= 4, "cost " + q + " above 4");
  }
  const std::uint64_t at4 = hist.contains("4") ? hist.at("4").get<std::uint64_t>() : 0;
  v.require(total == 65536, "histogram covers " + std::to_string(total) + " functions");
  v.require(at4 == 32, std::to_string(at4) + " functions at 4 queries");
  v.require(m.at("andIsomorphic").get<std::uint64_t>() == 32, "AND-isomorphic count at 4 is not 32");
  const double t = s.report.at("wallTime").get<double>();
  v.require(t < 60.0, "runtime " + std::to_string(t) + " s");
  std::ostringstream d;
  d << total << " functions, " << at4 << " at 4 queries, histogram " << hist.dump() << ", " << t << " s";
  detail = d.str();
  return v;
}

Verdict ac2(std::string& detail) {
  Verdict v;
  // Profile (b0..b3) -> expected cost; the AND-isomorphic rows are AND, OR, NOR, NAND.
  int mismatches = 0;
  for (int code = 0; code < 16; ++code) {
    std::vector<int> bits(4);
    for (int w = 0; w < 4; ++w) bits[w] = (code >> (3 - w)) & 1;
    const bool constant = code == 0 || code == 15;
    const bool andRow = code == 0b0001 || code == 0b0111 || code == 0b1000 || code == 0b1110;
    const unsigned expected = constant ? 0 : andRow ? 3 : 2;
    const Synth got = synthProfile(bits);
    const std::string name = profileText(bits);
    v.require(got.error.empty(), name + ": " + got.error);
    v.require(got.ok, name + ": certificate did not verify");
    v.require(got.andIsomorphic == andRow, name + ": AND-isomorphism flag wrong");
    if (got.queries != expected) {
      ++mismatches;
      v.require(false, name + ": expected " + std::to_string(expected) + ", got " + std::to_string(got.queries));
    }
  }
  const Suite s = runSuite("theorem1", 3);
  requireClean(v, s);
  detail = "16 profiles, " + std::to_string(mismatches) + " cost mismatches; theorem1 suite at n <= 3 " +
           (s.ran ? std::to_string(s.report.at("checked").get<std::uint64_t>()) + " checks" : "not run");
  return v;
}

Verdict ac3(std::string& detail) {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (unsigned n = 1; n <= 12; ++n) {
    for (const char* name : {"parity", "nae"}) {
      const bool parity = std::strcmp(name, "parity") == 0;
      if (!parity && n < 2) continue;
      std::vector<int> bits(n + 1);
      for (unsigned w = 0; w <= n; ++w) bits[w] = parity ? static_cast<int>(w & 1u) : (w != 0 && w != n);
      const unsigned expected = parity ? (n + 1) / 2 : n - 1;
      exq_program* p = nullptr;
      exq_function* f = nullptr;
      char* report = nullptr;
      int exact = 0;
      const std::string label = std::string(name) + "(" + std::to_string(n) + ")";
      if (exq_program_builtin(name, n, &p) == EXQ_OK && exq_function_parse(profileText(bits).c_str(), &f) == EXQ_OK &&
          exq_simulate(p, f, &exact, &report) == EXQ_OK) {
        const Json r = Json::parse(report);
        const double amp = r.at("worstWrongAmplitude").get<double>();
        worst = std::max(worst, amp);
        v.require(exact == 1, label + " not exact");
        v.require(amp <= 1e-9, label + " wrong amplitude " + std::to_string(amp));
        v.require(exq_program_queries(p) == expected, label + " uses " + std::to_string(exq_program_queries(p)));
        v.require(r.at("queriesUsedWorstCase").get<unsigned>() == expected, label + " worst-case path length");
      } else {
        v.require(false, label + ": " + exq_last_error());
      }
      exq_string_free(report);
      exq_function_free(f);
      exq_program_free(p);
    }
  }
  const Suite s = runSuite("primitives", 12);
  requireClean(v, s);
  const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.require(t < 10.0, "runtime " + std::to_string(t) + " s");
  std::ostringstream d;
  d << "parity/NAE n <= 12 exact, worst wrong amplitude " << worst << ", gadget suite "
    << (s.ran ? s.report.at("checked").get<std::uint64_t>() : 0) << " checks, " << t << " s";
  detail = d.str();
  return v;
}

Verdict suiteOnly(const std::string& id, int maxN, std::string& detail,
                  const std::function<void(Verdict&, const Json&)>& extra = {}) {
  Verdict v;
  const Suite s = runSuite(id, maxN);
  requireClean(v, s);
  if (s.ran) {
    if (extra) extra(v, s.report);
    std::ostringstream d;
    d << s.report.at("checked") << " checks, " << s.report.at("failed") << " failed, " << s.report.at("wallTime")
      << " s";
    detail = d.str();
  }
  return v;
}

Verdict ac4(std::string& detail) {
  return suiteOnly("classical-depth", 12, detail, [](Verdict& v, const Json& r) {
    v.require(r.at("metrics").at("readOnceFormulas").get<std::uint64_t>() >= 12000, "fewer than 1000 formulas per n");
  });
}

Verdict ac5(std::string& detail) {
  return suiteOnly("lemma1", 10, detail, [](Verdict& v, const Json& r) {
    v.require(r.at("checked").get<std::uint64_t>() >= 100000, "fewer than 1e5 tables");
  });
}

Verdict ac6(std::string& detail) {
  return suiteOnly("structural-lemmas", 5, detail, [](Verdict& v, const Json& r) {
    v.require(r.at("checked").get<std::uint64_t>() >= 200000, "n=5 samples missing");
  });
}

Verdict ac7(std::string& detail) {
  Verdict v = suiteOnly("corollary", 5, detail, [](Verdict& v, const Json& r) {
    const auto& per = r.at("metrics").at("perArity");
    for (unsigned n : {3u, 4u, 5u}) {
      const auto key = std::to_string(n);
      const std::uint64_t want = std::uint64_t{1} << (n + 1);
      const std::uint64_t got = per.contains(key) ? per.at(key).at("andIsomorphic").get<std::uint64_t>() : 0;
      v.require(got == want, "n=" + key + ": " + std::to_string(got) + " instead of " + std::to_string(want));
    }
  });
  return v;
}

Verdict ac8(std::string& detail) {
  return suiteOnly("monotone", 4, detail, [](Verdict& v, const Json& r) {
    const auto& at4 = r.at("metrics").at("perArity").at("4");
    v.require(at4.at("functions").get<std::uint64_t>() == 168, "monotone 4-bit population is not 168");
    v.require(at4.at("costN").get<std::uint64_t>() == 2, "not exactly two monotone functions at 4 queries");
  });
}

Verdict ac9(std::string& detail) {
  Verdict v;
  const Suite one = runSuite("npn-census", 4, 1);
  const Suite four = runSuite("npn-census", 4, 4);
  requireClean(v, one);
  requireClean(v, four);
  if (!one.ran || !four.ran) return v;
  const auto& per1 = one.report.at("metrics").at("perArity");
  const auto& per4 = four.report.at("metrics").at("perArity");
  v.require(per1 == per4, "census differs between 1 and 4 jobs");
  const auto& n4 = per1.at("4");
  v.require(n4.at("classes") == n4.at("orbits"), "canonical classes differ from orbit count");
  v.require(n4.at("classes").get<std::uint64_t>() == 222, "n=4 class count is not 222");
  detail = "n=4: " + n4.at("classes").dump() + " classes, " + n4.at("orbits").dump() +
           " brute-force orbits, identical for 1 and 4 jobs";
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  bool stretch = false;
  for (int i = 1; i < argc; ++i) stretch |= std::strcmp(argv[i], "--stretch") == 0;

  struct Criterion {
    const char* id;
    const char* title;
    Verdict (*run)(std::string&);
  };
  const Criterion criteria[] = {
      {"AC1", "4-bit sweep: <= 3 queries except 32 AND-isomorphic at 4", ac1},
      {"AC2", "symmetric 3-bit profiles cost 0/3/2 as classified", ac2},
      {"AC3", "parity, NAE and XOR gadget programs simulate exactly", ac3},
      {"AC4", "D(f) = n for symmetric and read-once functions", ac4},
      {"AC5", "D(f) >= deg(f) on 1e5 random tables", ac5},
      {"AC6", "structural lemmas at n = 4 and 5", ac6},
      {"AC7", "AND-isomorphic counts 16/32/64", ac7},
      {"AC8", "monotone 4-bit functions at 4 queries are AND4 and OR4", ac8},
      {"AC9", "NPN census at n = 4 against brute force, job-count stable", ac9},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    std::string detail;
    Verdict v;
    try {
      v = c.run(detail);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    std::cout << c.id << " " << (v.ok ? "PASS" : "FAIL") << "  " << c.title;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
    for (const auto& note : v.notes) std::cout << "    " << note << "\n";
    std::cout.flush();
    failed += !v.ok;
  }

  if (stretch) {
    const Suite s = runSuite("npn5-classes", 5);
    if (!s.ran) {
      std::cout << "STRETCH ERROR npn5-classes: " << s.error << "\n";
    } else {
      std::cout << "STRETCH " << (s.report.at("failed").get<std::uint64_t>() == 0 ? "PASS" : "FINDINGS")
                << " npn5-classes [" << s.report.at("checked") << " checks, " << s.report.at("failed")
                << " failed, metrics " << s.report.at("metrics").dump() << "]\n";
    }
  }

  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
