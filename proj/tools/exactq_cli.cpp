#include <cstdint>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "exactq/exactq.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct CliError {
  int exitCode;
  std::string message;
};

int exitCodeFor(exq_status status) {
  switch (status) {
    case EXQ_OK: return kExitOk;
    case EXQ_ERR_PARSE:
    case EXQ_ERR_INVALID_ARGUMENT:
    case EXQ_ERR_OUT_OF_RANGE: return kExitUsage;
    default: return kExitFailure;
  }
}

void check(exq_status status) {
  if (status != EXQ_OK) {
    throw CliError{exitCodeFor(status), std::string(exq_status_name(status)) + ": " + exq_last_error()};
  }
}

struct Owned {
  char* text = nullptr;
  ~Owned() { exq_string_free(text); }
  std::string str() const { return text ? std::string(text) : std::string(); }
  Json json() const { return Json::parse(str()); }
};

template <class T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  ~Handle() { Free(ptr); }
};
using FunctionHandle = Handle<exq_function, exq_function_free>;
using ProgramHandle = Handle<exq_program, exq_program_free>;
using CertificateHandle = Handle<exq_certificate, exq_certificate_free>;

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kExitUsage, "cannot open '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void writeFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{kExitFailure, "cannot write '" + path + "'"};
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

std::string valueText(const Json& v) {
  if (v.is_null()) return "n/a";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  return v.dump();
}

// x1 first, so bit i of the code is character i.
std::string inputBits(std::uint64_t code, unsigned arity) {
  std::string s;
  for (unsigned i = 0; i < arity; ++i) s += ((code >> i) & 1u) ? '1' : '0';
  return s;
}

struct Output {
  std::string format = "human";
  std::string path;

  bool json() const { return format == "json"; }

  void emit(const Json& doc, const std::string& human) const {
    const std::string text = json() ? doc.dump(2) + "\n" : human;
    if (path.empty()) {
      std::cout << text;
    } else {
      writeFile(path, text);
    }
  }
};

std::string humanAnalysis(const Json& a) {
  static const std::pair<const char*, const char*> rows[] = {
      {"function", "function"},
      {"arity", "arity"},
      {"popcount", "popcount"},
      {"essentialVariables", "essential variables"},
      {"symmetric", "symmetric"},
      {"profile", "profile"},
      {"className", "class"},
      {"monotone", "monotone"},
      {"readOnce", "read-once"},
      {"degree", "degree"},
      {"polynomial", "polynomial"},
      {"decisionTreeDepth", "decision tree depth"},
      {"npnCanonical", "NPN canonical"},
      {"andIsomorphic", "AND-isomorphic"},
  };
  std::ostringstream out;
  for (const auto& [key, label] : rows) {
    if (!a.contains(key)) continue;
    out << std::left << std::setw(22) << (std::string(label) + ":") << valueText(a[key]) << "\n";
  }
  return out.str();
}

std::string humanSimulation(const Json& s) {
  const unsigned arity = s["arity"].get<unsigned>();
  std::ostringstream out;
  out << (s["exact"].get<bool>() ? "exact" : "NOT exact") << ": " << s["function"].get<std::string>() << ", "
      << s["queriesUsedWorstCase"] << " queries worst case, worst wrong amplitude " << std::scientific
      << std::setprecision(3) << s["worstWrongAmplitude"].get<double>() << "\n";
  if (!s["outcomes"].is_null()) {
    out << "outcomes (input code 0 first): ";
    for (const auto& o : s["outcomes"]) {
      const int v = o.get<int>();
      out << (v < 0 ? '?' : static_cast<char>('0' + v));
    }
    out << "\n";
  }
  for (const auto& f : s["failingInputs"]) {
    out << "  failing input x=" << inputBits(f["input"].get<std::uint64_t>(), arity) << " expected "
        << f["expected"] << " got " << (f["got"].get<int>() < 0 ? std::string("ambiguous") : f["got"].dump())
        << "\n";
  }
  return out.str();
}

std::string humanReports(const Json& bundle) {
  std::ostringstream out;
  for (const auto& r : bundle["reports"]) {
    const bool ok = r["failed"].get<std::uint64_t>() == 0;
    out << (ok ? "PASS " : "FAIL ") << r["suiteId"].get<std::string>() << ": " << r["passed"] << "/" << r["checked"]
        << " checks passed, " << r["failed"] << " failed (" << std::fixed << std::setprecision(2)
        << r["wallTime"].get<double>() << " s)\n";
    out << "  population: " << r["population"].get<std::string>() << "\n";
    for (const auto& [key, value] : r["metrics"].items()) out << "  " << key << ": " << value.dump() << "\n";
    for (const auto& f : r["failures"]) {
      out << "  failure: " << f["input"].get<std::string>() << " | expected " << f["expected"].get<std::string>()
          << " | got " << f["got"].get<std::string>() << "\n";
    }
  }
  out << (bundle["ok"].get<bool>() ? "all suites passed" : "some suites FAILED") << "\n";
  return out.str();
}

int cmdAnalyze(const std::string& fn, const Output& output) {
  FunctionHandle f;
  check(exq_function_parse(fn.c_str(), &f.ptr));
  Owned report;
  check(exq_analyze(f.ptr, &report.text));
  const Json doc = report.json();
  output.emit(doc, humanAnalysis(doc));
  return kExitOk;
}

int cmdSynth(const std::string& fn, const std::string& certPath, const Output& output) {
  FunctionHandle f;
  check(exq_function_parse(fn.c_str(), &f.ptr));
  CertificateHandle cert;
  check(exq_synthesize(f.ptr, &cert.ptr));

  // exq_synthesize already verified; this re-check guards the file write.
  int ok = 0;
  Owned verdict;
  check(exq_certificate_verify(cert.ptr, &ok, &verdict.text));
  if (!ok) throw CliError{kExitFailure, "certificate failed verification; nothing written"};

  Owned certText;
  check(exq_certificate_to_json(cert.ptr, &certText.text));
  const Json certDoc = Json::parse(certText.str());
  if (!certPath.empty()) writeFile(certPath, certText.str());

  Json doc;
  doc["schema"] = "exactq.synth/1";
  doc["function"] = certDoc["function"];
  doc["claimedQueries"] = certDoc["claimedQueries"];
  doc["level"] = certDoc["level"];
  doc["optimal"] = certDoc["optimal"];
  doc["verified"] = true;
  doc["certificatePath"] = certPath.empty() ? Json(nullptr) : Json(certPath);
  if (certPath.empty()) doc["certificate"] = certDoc;

  std::ostringstream human;
  human << certDoc["function"].get<std::string>() << ": " << certDoc["claimedQueries"] << " queries, "
        << certDoc["level"].get<std::string>() << (certDoc["optimal"].get<bool>() ? ", optimal" : "") << ", verified";
  if (!certPath.empty()) human << ", written to " << certPath;
  human << "\n";
  output.emit(doc, human.str());
  return kExitOk;
}

int cmdSimulate(const std::string& file, const std::string& fn, const Output& output) {
  const std::string text = readFile(file);
  ProgramHandle program;
  check(exq_program_from_json(text.c_str(), &program.ptr));

  FunctionHandle f;
  if (!fn.empty()) {
    check(exq_function_parse(fn.c_str(), &f.ptr));
  } else {
    CertificateHandle cert;
    if (exq_certificate_from_json(text.c_str(), &cert.ptr) != EXQ_OK) {
      throw CliError{kExitUsage, "'" + file + "' is a bare program; pass --fn with the target function"};
    }
    check(exq_certificate_function(cert.ptr, &f.ptr));
  }

  int exact = 0;
  Owned report;
  const exq_status status = exq_simulate(program.ptr, f.ptr, &exact, &report.text);
  if (status == EXQ_ERR_NOT_SIMULATABLE) {
    throw CliError{kExitFailure, std::string("not simulatable: ") + exq_last_error()};
  }
  check(status);
  const Json doc = report.json();
  output.emit(doc, humanSimulation(doc));
  return exact ? kExitOk : kExitFailure;
}

int envMaxN() {
  const char* env = std::getenv("EXACTQ_MAX_N");
  if (!env || !*env) return -1;
  try {
    std::size_t used = 0;
    const int v = std::stoi(env, &used);
    if (used != std::string(env).size() || v < 0) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw CliError{kExitUsage, std::string("EXACTQ_MAX_N must be a non-negative integer, got '") + env + "'"};
  }
}

Json runSuites(const std::string& suites, int maxN, std::uint64_t seed, unsigned jobs) {
  int allOk = 0;
  Owned report;
  check(exq_run_suites(suites.c_str(), maxN, seed, jobs, &allOk, &report.text));
  return report.json();
}

// The environment bound is clamped to each suite's own limit, so it can be
// set once for every suite.
Json runSuitesClamped(const std::string& suites, int envMaxN, std::uint64_t seed, unsigned jobs) {
  Owned ids;
  check(exq_suite_ids(&ids.text));
  const Json registry = ids.json();
  std::vector<std::string> selected;
  if (suites == "all") {
    for (const auto& id : registry["default"]) selected.push_back(id.get<std::string>());
  } else {
    std::istringstream in(suites);
    for (std::string id; std::getline(in, id, ',');) {
      id.erase(0, id.find_first_not_of(" \t"));
      id.erase(id.find_last_not_of(" \t") + 1);
      if (!id.empty()) selected.push_back(id);
    }
  }
  Json bundle;
  bool ok = true;
  Json reports = Json::array();
  for (const auto& id : selected) {
    int maxN = envMaxN;
    for (const auto& info : registry["suites"]) {
      if (info["id"] == id) maxN = std::min(maxN, info["boundMaxN"].get<int>());
    }
    Json one = runSuites(id, maxN, seed, jobs);
    ok = ok && one["ok"].get<bool>();
    if (!bundle.contains("schema")) bundle["schema"] = one["schema"];
    for (auto& r : one["reports"]) reports.push_back(std::move(r));
  }
  if (!bundle.contains("schema")) throw CliError{kExitUsage, "no suite selected"};
  bundle["ok"] = ok;
  bundle["reports"] = std::move(reports);
  return bundle;
}

int cmdVerify(const std::string& suites, int maxN, std::uint64_t seed, unsigned jobs, const Output& output) {
  const int envBound = maxN < 0 ? envMaxN() : -1;
  const Json doc = envBound >= 0 ? runSuitesClamped(suites, envBound, seed, jobs) : runSuites(suites, maxN, seed, jobs);
  output.emit(doc, humanReports(doc));
  return doc["ok"].get<bool>() ? kExitOk : kExitFailure;
}

int cmdEmit(const std::string& which, unsigned n, const std::string& path) {
  ProgramHandle program;
  check(exq_program_builtin(which.c_str(), n, &program.ptr));
  Owned text;
  check(exq_program_to_json(program.ptr, &text.text));
  if (path.empty()) {
    std::cout << text.str() << "\n";
  } else {
    writeFile(path, text.str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact quantum query algorithms for small Boolean functions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(exq_version()));

  Output output;
  app.add_option("--format", output.format, "Output format")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();

  std::string fn;
  std::string outPath;
  auto* analyze = app.add_subcommand("analyze", "Classical properties of a function");
  analyze->add_option("--fn", fn, "Function (bin:, hex:, profile: or formula:)")->required();
  analyze->add_option("--out", outPath, "Write the report to a file");

  auto* synth = app.add_subcommand("synth", "Synthesize and verify a query algorithm");
  synth->add_option("--fn", fn, "Function (bin:, hex:, profile: or formula:)")->required();
  synth->add_option("--out", outPath, "Certificate file to write");

  std::string programFile;
  auto* simulate = app.add_subcommand("simulate", "Simulate a program or certificate file");
  simulate->add_option("file", programFile, "Program or certificate JSON")->required()->check(CLI::ExistingFile);
  simulate->add_option("--fn", fn, "Target function (defaults to the certificate's)");
  simulate->add_option("--out", outPath, "Write the report to a file");

  std::string suites = "all";
  int maxN = -1;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suites, "Comma-separated suite ids or 'all'")->capture_default_str();
  verify->add_option("--max-n", maxN, "Largest arity (overrides EXACTQ_MAX_N)")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed, "Seed for sampled suites")->capture_default_str();
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--out", outPath, "Write the report to a file");

  std::string builtin;
  unsigned n = 0;
  auto* emit = app.add_subcommand("emit", "Write a built-in program as JSON");
  emit->add_option("program", builtin, "parity or nae")->required()->check(CLI::IsMember({"parity", "nae"}));
  emit->add_option("--n", n, "Number of variables")->required();
  emit->add_option("--out", outPath, "Program file to write");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) {
      output.path = outPath;
      return cmdAnalyze(fn, output);
    }
    if (*synth) return cmdSynth(fn, outPath, output);
    if (*simulate) {
      output.path = outPath;
      return cmdSimulate(programFile, fn, output);
    }
    if (*verify) {
      output.path = outPath;
      return cmdVerify(suites, maxN, seed, jobs, output);
    }
    if (*emit) return cmdEmit(builtin, n, outPath);
  } catch (const CliError& e) {
    std::cerr << "exactq: " << e.message << "\n";
    return e.exitCode;
  } catch (const std::exception& e) {
    std::cerr << "exactq: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
