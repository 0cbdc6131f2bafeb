#include "exactq/exactq.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "exactq/analysis.hpp"
#include "exactq/formula.hpp"
#include "exactq/function_text.hpp"
#include "exactq/program.hpp"
#include "exactq/program_json.hpp"
#include "exactq/synth.hpp"
#include "exactq/verify.hpp"

struct exq_function {
  exactq::TruthTable table;
};

struct exq_program {
  exactq::NodePtr root;
  unsigned arity = 0;
};

struct exq_certificate {
  exactq::Certificate cert;
};

namespace {

thread_local std::string lastError;

exq_status fail(exq_status status, std::string message) {
  lastError = std::move(message);
  return status;
}

char* copyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

// Maps every exception the core can raise to a status code.
template <class Fn>
exq_status guarded(Fn&& fn) {
  try {
    lastError.clear();
    return fn();
  } catch (const exactq::NotSimulatableError& e) {
    std::ostringstream msg;
    msg << "program contains axiom leaves";
    for (const auto& loc : e.locations()) msg << "\n  axiom at " << loc;
    return fail(EXQ_ERR_NOT_SIMULATABLE, msg.str());
  } catch (const exactq::FunctionParseError& e) {
    return fail(EXQ_ERR_PARSE, e.what());
  } catch (const exactq::FormulaParseError& e) {
    return fail(EXQ_ERR_PARSE, e.what());
  } catch (const exactq::JsonFormatError& e) {
    return fail(EXQ_ERR_PARSE, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(EXQ_ERR_PARSE, std::string("json: ") + e.what());
  } catch (const exactq::ProgramError& e) {
    return fail(EXQ_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(EXQ_ERR_OUT_OF_RANGE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(EXQ_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(EXQ_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(EXQ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(EXQ_ERR_INTERNAL, "unknown error");
  }
}

#define EXQ_REQUIRE(cond, what) \
  if (!(cond)) return fail(EXQ_ERR_INVALID_ARGUMENT, what)

nlohmann::json parseJson(const char* text) {
  return nlohmann::json::parse(text);
}

constexpr unsigned kMaxListedArity = 12;

nlohmann::ordered_json simulationJson(const exactq::SimulationReport& r, const exactq::TruthTable& f) {
  nlohmann::ordered_json j;
  j["schema"] = "exactq.simulation/1";
  j["arity"] = r.arity;
  j["function"] = exactq::formatFunction(f);
  j["exact"] = r.exact;
  j["worstWrongAmplitude"] = r.worstWrongAmplitude;
  j["queriesUsedWorstCase"] = r.queriesUsedWorstCase;
  if (r.arity <= kMaxListedArity) {
    j["outcomes"] = r.perInputOutcomes;
  } else {
    j["outcomes"] = nullptr;
  }
  auto failing = nlohmann::ordered_json::array();
  for (auto m : r.failingInputs) {
    nlohmann::ordered_json row;
    row["input"] = m;
    row["expected"] = f.get(m) ? 1 : 0;
    row["got"] = r.perInputOutcomes.at(m);
    failing.push_back(row);
  }
  j["failingInputs"] = failing;
  return j;
}

std::vector<std::string> splitCsv(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

}  // namespace

extern "C" {

const char* exq_last_error(void) { return lastError.c_str(); }

const char* exq_version(void) { return "0.1.0"; }

const char* exq_status_name(exq_status status) {
  switch (status) {
    case EXQ_OK: return "ok";
    case EXQ_ERR_PARSE: return "parse error";
    case EXQ_ERR_INVALID_ARGUMENT: return "invalid argument";
    case EXQ_ERR_OUT_OF_RANGE: return "out of range";
    case EXQ_ERR_NOT_SIMULATABLE: return "not simulatable";
    case EXQ_ERR_VERIFICATION: return "verification failed";
    case EXQ_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void exq_string_free(char* text) { std::free(text); }

exq_status exq_function_parse(const char* text, exq_function** out) {
  EXQ_REQUIRE(text && out, "null argument");
  return guarded([&] {
    *out = new exq_function{exactq::parseFunction(text)};
    return EXQ_OK;
  });
}

exq_status exq_function_from_word(unsigned arity, uint64_t word, exq_function** out) {
  EXQ_REQUIRE(out, "null argument");
  if (arity > 6) return fail(EXQ_ERR_OUT_OF_RANGE, "from_word supports arity <= 6");
  if (arity < 6 && (word >> (1u << arity)) != 0) {
    return fail(EXQ_ERR_INVALID_ARGUMENT, "word has bits beyond 2^arity");
  }
  return guarded([&] {
    *out = new exq_function{exactq::TruthTable::fromWord(arity, word)};
    return EXQ_OK;
  });
}

void exq_function_free(exq_function* f) { delete f; }

unsigned exq_function_arity(const exq_function* f) { return f ? f->table.arity() : 0; }

exq_status exq_function_get(const exq_function* f, uint64_t input, int* value) {
  EXQ_REQUIRE(f && value, "null argument");
  if (input >= f->table.size()) return fail(EXQ_ERR_OUT_OF_RANGE, "input code beyond 2^arity");
  *value = f->table.get(input) ? 1 : 0;
  return EXQ_OK;
}

exq_status exq_function_format(const exq_function* f, char** out) {
  EXQ_REQUIRE(f && out, "null argument");
  return guarded([&] {
    *out = copyString(exactq::formatFunction(f->table));
    return EXQ_OK;
  });
}

exq_status exq_analyze(const exq_function* f, char** json_out) {
  EXQ_REQUIRE(f && json_out, "null argument");
  return guarded([&] {
    *json_out = copyString(exactq::analyzeFunction(f->table).dump());
    return EXQ_OK;
  });
}

exq_status exq_synthesize(const exq_function* f, exq_certificate** out) {
  EXQ_REQUIRE(f && out, "null argument");
  return guarded([&] {
    auto cert = exactq::synthesize(f->table);
    auto check = exactq::verifyCertificate(cert);
    if (!check.ok) {
      std::string msg = "synthesized certificate failed verification";
      for (const auto& p : check.problems) msg += "\n  " + p;
      return fail(EXQ_ERR_VERIFICATION, msg);
    }
    *out = new exq_certificate{std::move(cert)};
    return EXQ_OK;
  });
}

exq_status exq_certificate_from_json(const char* text, exq_certificate** out) {
  EXQ_REQUIRE(text && out, "null argument");
  return guarded([&] {
    *out = new exq_certificate{exactq::certificateFromJson(parseJson(text))};
    return EXQ_OK;
  });
}

exq_status exq_certificate_to_json(const exq_certificate* c, char** out) {
  EXQ_REQUIRE(c && out, "null argument");
  return guarded([&] {
    *out = copyString(exactq::certificateToJson(c->cert).dump(2));
    return EXQ_OK;
  });
}

void exq_certificate_free(exq_certificate* c) { delete c; }

unsigned exq_certificate_queries(const exq_certificate* c) { return c ? c->cert.claimedQueries : 0; }

const char* exq_certificate_level(const exq_certificate* c) {
  if (!c) return "";
  switch (c->cert.level) {
    case exactq::Level::FullySimulated: return "FullySimulated";
    case exactq::Level::CountCertified: return "CountCertified";
    case exactq::Level::ClassicalOnly: return "ClassicalOnly";
  }
  return "";
}

exq_status exq_certificate_verify(const exq_certificate* c, int* ok, char** json_out) {
  EXQ_REQUIRE(c && ok, "null argument");
  return guarded([&] {
    auto r = exactq::verifyCertificate(c->cert);
    *ok = r.ok ? 1 : 0;
    if (json_out) {
      nlohmann::ordered_json j;
      j["ok"] = r.ok;
      j["function"] = exactq::formatFunction(c->cert.function);
      j["claimedQueries"] = c->cert.claimedQueries;
      j["recountedQueries"] = r.recountedQueries;
      j["level"] = exactq::levelName(c->cert.level);
      j["problems"] = r.problems;
      if (r.report) j["simulation"] = simulationJson(*r.report, c->cert.function);
      *json_out = copyString(j.dump());
    }
    return EXQ_OK;
  });
}

exq_status exq_certificate_function(const exq_certificate* c, exq_function** out) {
  EXQ_REQUIRE(c && out, "null argument");
  return guarded([&] {
    *out = new exq_function{c->cert.function};
    return EXQ_OK;
  });
}

exq_status exq_certificate_program(const exq_certificate* c, exq_program** out) {
  EXQ_REQUIRE(c && out, "null argument");
  return guarded([&] {
    *out = new exq_program{c->cert.program, c->cert.function.arity()};
    return EXQ_OK;
  });
}

exq_status exq_program_from_json(const char* text, exq_program** out) {
  EXQ_REQUIRE(text && out, "null argument");
  return guarded([&] {
    auto j = parseJson(text);
    if (j.is_object() && j.contains("schema") && j["schema"] == exactq::kCertificateSchema) {
      auto cert = exactq::certificateFromJson(j);
      *out = new exq_program{cert.program, cert.function.arity()};
    } else {
      auto doc = exactq::programFromJson(j);
      *out = new exq_program{doc.root, doc.arity};
    }
    return EXQ_OK;
  });
}

exq_status exq_program_to_json(const exq_program* p, char** out) {
  EXQ_REQUIRE(p && out, "null argument");
  return guarded([&] {
    *out = copyString(exactq::programToJson(p->root, p->arity).dump(2));
    return EXQ_OK;
  });
}

exq_status exq_program_builtin(const char* name, unsigned n, exq_program** out) {
  EXQ_REQUIRE(name && out, "null argument");
  std::string which(name);
  if (which != "parity" && which != "nae") return fail(EXQ_ERR_INVALID_ARGUMENT, "unknown builtin '" + which + "'");
  if (which == "parity" && n < 1) return fail(EXQ_ERR_OUT_OF_RANGE, "parity needs n >= 1");
  if (which == "nae" && n < 2) return fail(EXQ_ERR_OUT_OF_RANGE, "nae needs n >= 2");
  if (n > exactq::TruthTable::kMaxArity) return fail(EXQ_ERR_OUT_OF_RANGE, "n too large");
  return guarded([&] {
    auto root = which == "parity" ? exactq::parityProgram(n) : exactq::naeProgram(n);
    *out = new exq_program{root, n};
    return EXQ_OK;
  });
}

void exq_program_free(exq_program* p) { delete p; }

unsigned exq_program_queries(const exq_program* p) { return p ? exactq::queryCost(p->root) : 0; }

unsigned exq_program_arity(const exq_program* p) { return p ? p->arity : 0; }

exq_status exq_simulate(const exq_program* p, const exq_function* f, int* exact, char** json_out) {
  EXQ_REQUIRE(p && f && exact, "null argument");
  if (f->table.arity() < exactq::requiredArity(p->root)) {
    return fail(EXQ_ERR_INVALID_ARGUMENT, "program reads variables beyond the function's arity");
  }
  return guarded([&] {
    auto r = exactq::simulate(p->root, f->table);
    *exact = r.exact ? 1 : 0;
    if (json_out) *json_out = copyString(simulationJson(r, f->table).dump());
    return EXQ_OK;
  });
}

exq_status exq_suite_ids(char** json_out) {
  EXQ_REQUIRE(json_out, "null argument");
  return guarded([&] {
    nlohmann::ordered_json j;
    j["all"] = exactq::suiteIds();
    j["default"] = exactq::defaultSuiteIds();
    auto suites = nlohmann::ordered_json::array();
    for (const auto& info : exactq::suiteInfo()) {
      suites.push_back({{"id", info.id},
                        {"defaultMaxN", info.defaultMaxN},
                        {"boundMaxN", info.boundMaxN},
                        {"inDefault", info.inDefault}});
    }
    j["suites"] = suites;
    *json_out = copyString(j.dump());
    return EXQ_OK;
  });
}

exq_status exq_run_suites(const char* suites, int max_n, uint64_t seed, unsigned jobs, int* all_ok, char** json_out) {
  EXQ_REQUIRE(suites && all_ok && json_out, "null argument");
  EXQ_REQUIRE(jobs >= 1, "jobs must be at least 1");
  return guarded([&] {
    std::vector<std::string> ids;
    if (std::string(suites) == "all") {
      ids = exactq::defaultSuiteIds();
    } else {
      ids = splitCsv(suites);
    }
    if (ids.empty()) return fail(EXQ_ERR_INVALID_ARGUMENT, "no suite selected");
    const auto known = exactq::suiteIds();
    for (const auto& id : ids) {
      if (std::find(known.begin(), known.end(), id) == known.end()) {
        return fail(EXQ_ERR_INVALID_ARGUMENT, "unknown suite '" + id + "'");
      }
    }
    exactq::SuiteOptions options;
    if (max_n >= 0) options.maxN = static_cast<unsigned>(max_n);
    options.seed = seed;
    options.jobs = jobs;
    std::vector<exactq::SuiteReport> reports;
    for (const auto& id : ids) reports.push_back(exactq::runSuite(id, options));
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.ok();
    *all_ok = ok ? 1 : 0;
    *json_out = copyString(exactq::reportsToJson(reports).dump());
    return EXQ_OK;
  });
}

}  // extern "C"
