#include "exactq/function_text.hpp"

#include <bit>
#include <cctype>

#include "exactq/boolfun.hpp"
#include "exactq/formula.hpp"

namespace exactq {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

unsigned log2Exact(std::size_t length, const std::string& payload, const char* what) {
  if (length == 0 || !std::has_single_bit(length)) {
    throw FunctionParseError(std::string(what) + " length must be a power of two", payload);
  }
  const unsigned n = static_cast<unsigned>(std::countr_zero(length));
  if (n > TruthTable::kMaxArity) throw FunctionParseError("table too large", payload.substr(0, 16));
  return n;
}

TruthTable parseBin(const std::string& payload) {
  const unsigned n = log2Exact(payload.size(), payload, "bin payload");
  TruthTable t(n);
  for (std::size_t m = 0; m < payload.size(); ++m) {
    const char c = payload[m];
    if (c != '0' && c != '1') throw FunctionParseError("bin payload must contain only 0 and 1", std::string(1, c));
    if (c == '1') t.set(m, true);
  }
  return t;
}

TruthTable parseHex(const std::string& payload) {
  const unsigned n = log2Exact(payload.size() * 4, payload, "hex payload");
  if (n < 2) throw FunctionParseError("hex payload needs at least one digit", payload);
  TruthTable t(n);
  for (std::size_t k = 0; k < payload.size(); ++k) {
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(payload[k])));
    unsigned digit = 0;
    if (c >= '0' && c <= '9') {
      digit = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      digit = static_cast<unsigned>(c - 'a' + 10);
    } else {
      throw FunctionParseError("invalid hex digit", std::string(1, payload[k]));
    }
    for (unsigned b = 0; b < 4; ++b) {
      if ((digit >> (3 - b)) & 1u) t.set(4 * k + b, true);
    }
  }
  return t;
}

TruthTable parseProfile(const std::string& payload) {
  SymmetricProfile profile;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = payload.find(',', start);
    const std::string item = trim(std::string_view(payload).substr(start, comma - start));
    if (item != "0" && item != "1") throw FunctionParseError("profile entries must be 0 or 1", item);
    profile.bits.push_back(item == "1");
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (profile.arity() > TruthTable::kMaxArity) throw FunctionParseError("profile too long", payload);
  return fromProfile(profile);
}

TruthTable parseFormulaPayload(const std::string& payload) {
  try {
    return toTruthTable(parseFormula(payload));
  } catch (const FormulaParseError& e) {
    const std::size_t pos = e.position();
    throw FunctionParseError(e.what(), pos < payload.size() ? payload.substr(pos, 8) : std::string("<end>"));
  } catch (const std::out_of_range& e) {
    throw FunctionParseError(e.what(), payload);
  }
}

}  // namespace

TruthTable parseFunction(std::string_view text) {
  const std::string s = trim(text);
  const std::size_t colon = s.find(':');
  if (colon == std::string::npos) {
    throw FunctionParseError("expected <format>:<payload> with format bin, hex, profile or formula", s);
  }
  const std::string format = s.substr(0, colon);
  const std::string payload = trim(std::string_view(s).substr(colon + 1));
  if (format == "bin") return parseBin(payload);
  if (format == "hex") return parseHex(payload);
  if (format == "profile") return parseProfile(payload);
  if (format == "formula") return parseFormulaPayload(payload);
  throw FunctionParseError("unknown function format", format);
}

std::string formatFunction(const TruthTable& f) {
  return f.arity() <= 6 ? "bin:" + f.toBin() : "hex:" + f.toHex();
}

}  // namespace exactq
