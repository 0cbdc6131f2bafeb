#include "exactq/program_json.hpp"

#include <unordered_map>

#include "exactq/function_text.hpp"

namespace exactq {

using nlohmann::json;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void bad(const std::string& what) { throw JsonFormatError("program json: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) bad("expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

unsigned unsignedField(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) bad(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<unsigned>();
}

Var varFrom(const json& v) {
  if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > TruthTable::kMaxArity) {
    bad("variable indices are integers from 1 to " + std::to_string(TruthTable::kMaxArity));
  }
  return v.get<Var>() - 1;
}

json matrixToJson(const ScaledMatrix& m) {
  json rows = json::array();
  for (unsigned r = 0; r < m.dim; ++r) {
    json row = json::array();
    for (unsigned c = 0; c < m.dim; ++c) {
      const Complex z = m.entries[r * m.dim + c];
      row.push_back(json::array({z.real(), z.imag()}));
    }
    rows.push_back(std::move(row));
  }
  return {{"normExp", m.normExp}, {"entries", std::move(rows)}};
}

ScaledMatrix matrixFromJson(const json& j, unsigned dim) {
  ScaledMatrix m;
  m.dim = dim;
  const json& exp = field(j, "normExp");
  if (!exp.is_number_integer()) bad("normExp must be an integer");
  m.normExp = exp.get<int>();
  const json& rows = field(j, "entries");
  if (!rows.is_array() || rows.size() != dim) bad("matrix must have dim rows");
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != dim) bad("matrix rows must have dim entries");
    for (const auto& z : row) {
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
        bad("matrix entries are [re, im] pairs");
      }
      m.entries.emplace_back(z[0].get<double>(), z[1].get<double>());
    }
  }
  return m;
}

}  // namespace

json nodeToJson(const NodePtr& node) {
  if (!node) bad("missing continuation");
  return std::visit(
      Overloaded{
          [](const Output& o) -> json { return {{"kind", "output"}, {"value", o.value ? 1 : 0}}; },
          [](const ClassicalQuery& q) -> json {
            return {{"kind", "cq"}, {"var", q.var + 1}, {"on0", nodeToJson(q.on0)}, {"on1", nodeToJson(q.on1)}};
          },
          [](const XorQuery& q) -> json {
            return {{"kind", "xq"},
                    {"vars", {q.i + 1, q.j + 1}},
                    {"on0", nodeToJson(q.on0)},
                    {"on1", nodeToJson(q.on1)}};
          },
          [](const UnitaryBlock& b) -> json {
            json labels = json::array();
            for (const auto& l : b.labels) labels.push_back(l ? json(*l + 1) : json(nullptr));
            json unitaries = json::array();
            for (const auto& u : b.unitaries) unitaries.push_back(matrixToJson(u));
            json outcomes = json::array();
            for (const auto& o : b.outcomes) outcomes.push_back(nodeToJson(o));
            return {{"kind", "ub"},
                    {"dim", b.dim},
                    {"labels", std::move(labels)},
                    {"unitaries", std::move(unitaries)},
                    {"outcomes", std::move(outcomes)}};
          },
          [](const AxiomLeaf& a) -> json {
            json vars = json::array();
            for (Var v : a.vars) vars.push_back(v + 1);
            return {{"kind", "axiom"},
                    {"classId", a.classId},
                    {"arity", a.arity},
                    {"vars", std::move(vars)},
                    {"table", formatFunction(a.table)},
                    {"queries", a.claimedQueries},
                    {"citation", a.citation},
                    {"on0", nodeToJson(a.on0)},
                    {"on1", nodeToJson(a.on1)}};
          },
      },
      node->body);
}

NodePtr nodeFromJson(const json& j) {
  const json& kindField = field(j, "kind");
  if (!kindField.is_string()) bad("kind must be a string");
  const std::string kind = kindField.get<std::string>();
  if (kind == "output") {
    const unsigned v = unsignedField(j, "value");
    if (v > 1) bad("output value must be 0 or 1");
    return output(v == 1);
  }
  if (kind == "cq") {
    return classical(varFrom(field(j, "var")), nodeFromJson(field(j, "on0")), nodeFromJson(field(j, "on1")));
  }
  if (kind == "xq") {
    const json& vars = field(j, "vars");
    if (!vars.is_array() || vars.size() != 2) bad("xq needs two variables");
    const Var a = varFrom(vars[0]);
    const Var b = varFrom(vars[1]);
    if (a == b) bad("xq variables must differ");
    return xorQuery(a, b, nodeFromJson(field(j, "on0")), nodeFromJson(field(j, "on1")));
  }
  if (kind == "ub") {
    UnitaryBlock block;
    block.dim = unsignedField(j, "dim");
    if (block.dim == 0 || block.dim > 4096) bad("ub dim must be between 1 and 4096");
    const json& labels = field(j, "labels");
    if (!labels.is_array() || labels.size() != block.dim) bad("ub needs one label per basis state");
    for (const auto& l : labels) block.labels.push_back(l.is_null() ? std::nullopt : std::optional<Var>(varFrom(l)));
    const json& unitaries = field(j, "unitaries");
    if (!unitaries.is_array() || unitaries.empty()) bad("ub needs at least one unitary");
    for (const auto& u : unitaries) block.unitaries.push_back(matrixFromJson(u, block.dim));
    const json& outcomes = field(j, "outcomes");
    if (!outcomes.is_array() || outcomes.size() != block.dim) bad("ub needs one outcome per basis state");
    for (const auto& o : outcomes) block.outcomes.push_back(nodeFromJson(o));
    return unitaryBlock(std::move(block));
  }
  if (kind == "axiom") {
    AxiomLeaf leaf;
    const json& cls = field(j, "classId");
    const json& cit = field(j, "citation");
    const json& table = field(j, "table");
    if (!cls.is_string() || !cit.is_string() || !table.is_string()) bad("axiom classId, citation and table are strings");
    leaf.classId = cls.get<std::string>();
    leaf.citation = cit.get<std::string>();
    leaf.arity = unsignedField(j, "arity");
    leaf.claimedQueries = unsignedField(j, "queries");
    for (const auto& v : field(j, "vars")) leaf.vars.push_back(varFrom(v));
    try {
      leaf.table = parseFunction(table.get<std::string>());
    } catch (const FunctionParseError& e) {
      bad(std::string("axiom table: ") + e.what());
    }
    leaf.on0 = nodeFromJson(field(j, "on0"));
    leaf.on1 = nodeFromJson(field(j, "on1"));
    return axiomLeaf(std::move(leaf));
  }
  bad("unknown node kind '" + kind + "'");
}

json programToJson(const NodePtr& program, unsigned arity) {
  return {{"schema", kProgramSchema}, {"arity", arity}, {"root", nodeToJson(program)}};
}

ProgramDocument programFromJson(const json& j) {
  const json& schema = field(j, "schema");
  if (!schema.is_string() || schema.get<std::string>() != kProgramSchema) {
    bad(std::string("schema must be \"") + kProgramSchema + "\"");
  }
  ProgramDocument doc;
  doc.arity = unsignedField(j, "arity");
  if (doc.arity > TruthTable::kMaxArity) bad("arity too large");
  doc.root = nodeFromJson(field(j, "root"));
  return doc;
}

}  // namespace exactq
