#include "exactq/program.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <functional>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "exactq/boolfun.hpp"

namespace exactq {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

NodePtr make(auto body) { return std::make_shared<const Node>(Node{std::move(body)}); }

}  // namespace

// ScaledMatrix ---------------------------------------------------------------

Complex ScaledMatrix::at(unsigned row, unsigned col) const { return entries[row * dim + col] * scale(); }

double ScaledMatrix::scale() const { return std::pow(2.0, -0.5 * normExp); }

ScaledMatrix ScaledMatrix::adjoint() const {
  ScaledMatrix out{dim, std::vector<Complex>(entries.size()), normExp};
  for (unsigned r = 0; r < dim; ++r) {
    for (unsigned c = 0; c < dim; ++c) out.entries[c * dim + r] = std::conj(entries[r * dim + c]);
  }
  return out;
}

bool ScaledMatrix::isUnitary(double tolerance) const {
  if (dim == 0 || entries.size() != std::size_t{dim} * dim) return false;
  for (unsigned r = 0; r < dim; ++r) {
    for (unsigned c = 0; c < dim; ++c) {
      Complex sum = 0.0;
      for (unsigned k = 0; k < dim; ++k) sum += at(r, k) * std::conj(at(c, k));
      const Complex expected = r == c ? 1.0 : 0.0;
      if (std::abs(sum - expected) > tolerance) return false;
    }
  }
  return true;
}

NotSimulatableError::NotSimulatableError(std::vector<std::string> locations)
    : std::runtime_error([&] {
        std::string msg = "not simulatable: axiom leaves at";
        for (const auto& l : locations) msg += " " + l;
        return msg;
      }()),
      locations_(std::move(locations)) {}

// Builders -------------------------------------------------------------------

NodePtr output(bool value) {
  static const NodePtr kFalse = make(Output{false});
  static const NodePtr kTrue = make(Output{true});
  return value ? kTrue : kFalse;
}

NodePtr classical(Var var, NodePtr on0, NodePtr on1) {
  return make(ClassicalQuery{var, std::move(on0), std::move(on1)});
}

NodePtr xorQuery(Var i, Var j, NodePtr on0, NodePtr on1) {
  if (i == j) throw std::invalid_argument("xorQuery needs two distinct variables");
  return make(XorQuery{i, j, std::move(on0), std::move(on1)});
}

NodePtr xorGadget(Var i, Var j, NodePtr on0, NodePtr on1) {
  if (i == j) throw std::invalid_argument("xorGadget needs two distinct variables");
  // U1 maps |0> to (|0> - |1>)/sqrt2; U2 = U1^dagger.
  ScaledMatrix u1{2, {1.0, 1.0, -1.0, 1.0}, 1};
  UnitaryBlock block;
  block.dim = 2;
  block.labels = {i, j};
  block.unitaries = {u1, u1.adjoint()};
  block.outcomes = {std::move(on0), std::move(on1)};
  return make(std::move(block));
}

NodePtr unitaryBlock(UnitaryBlock block) { return make(std::move(block)); }

NodePtr axiomLeaf(AxiomLeaf leaf) { return make(std::move(leaf)); }

NodePtr parityProgram(const std::vector<Var>& vars, bool invert) {
  const std::size_t pairs = vars.size() / 2;
  std::vector<std::array<NodePtr, 2>> memo(pairs + 1);
  std::function<NodePtr(std::size_t, bool)> build = [&](std::size_t p, bool acc) -> NodePtr {
    if (memo[p][acc]) return memo[p][acc];
    NodePtr node;
    if (p == pairs) {
      node = vars.size() % 2 ? classical(vars.back(), output(acc), output(!acc)) : output(acc);
    } else {
      node = xorGadget(vars[2 * p], vars[2 * p + 1], build(p + 1, acc), build(p + 1, !acc));
    }
    return memo[p][acc] = node;
  };
  return build(0, invert);
}

NodePtr parityProgram(unsigned n) {
  if (n == 0) throw std::invalid_argument("parityProgram: n must be >= 1");
  std::vector<Var> vars(n);
  std::iota(vars.begin(), vars.end(), Var{0});
  return parityProgram(vars, false);
}

NodePtr naeProgram(const std::vector<Var>& vars, std::uint64_t negMask, bool invert) {
  if (vars.size() < 2) throw std::invalid_argument("naeProgram needs at least two variables");
  NodePtr node = output(invert);
  for (std::size_t k = vars.size() - 1; k-- > 0;) {
    const bool flip = ((negMask >> k) ^ (negMask >> (k + 1))) & 1u;
    node = flip ? xorGadget(vars[k], vars[k + 1], output(!invert), node)
                : xorGadget(vars[k], vars[k + 1], node, output(!invert));
  }
  return node;
}

NodePtr naeProgram(unsigned n) {
  std::vector<Var> vars(n);
  std::iota(vars.begin(), vars.end(), Var{0});
  return naeProgram(vars, 0, false);
}

NodePtr andChain(const std::vector<Var>& vars, std::uint64_t negMask, bool invert) {
  NodePtr node = output(!invert);
  for (std::size_t k = vars.size(); k-- > 0;) {
    const bool neg = (negMask >> k) & 1u;
    node = neg ? classical(vars[k], node, output(invert)) : classical(vars[k], output(invert), node);
  }
  return node;
}

namespace {

using Vec = std::vector<Complex>;

Complex dot(const Vec& a, const Vec& b) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

// Appends the part of v orthogonal to basis, if it is not negligible.
void extendBasis(std::vector<Vec>& basis, Vec v) {
  for (const Vec& b : basis) {
    const Complex c = dot(b, v);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * b[i];
  }
  const double norm = std::sqrt(std::real(dot(v, v)));
  if (norm < 1e-6) return;
  for (Complex& z : v) z /= norm;
  basis.push_back(std::move(v));
}

// Orthonormal basis starting with `first`, completed from standard vectors.
std::vector<Vec> completeBasis(unsigned dim, std::vector<Vec> first) {
  for (unsigned e = 0; e < dim && first.size() < dim; ++e) {
    Vec v(dim, 0.0);
    v[e] = 1.0;
    extendBasis(first, std::move(v));
  }
  return first;
}

ScaledMatrix fromColumns(unsigned dim, const std::vector<std::pair<unsigned, Vec>>& columns) {
  std::vector<Vec> given;
  for (const auto& [col, v] : columns) given.push_back(v);
  std::vector<Vec> basis = completeBasis(dim, given);
  std::vector<Vec> ordered(dim);
  for (std::size_t k = 0; k < columns.size(); ++k) ordered[columns[k].first] = basis[k];
  std::size_t next = columns.size();
  for (Vec& v : ordered) {
    if (v.empty()) v = basis[next++];
  }
  ScaledMatrix m{dim, Vec(std::size_t{dim} * dim), 0};
  for (unsigned c = 0; c < dim; ++c) {
    for (unsigned r = 0; r < dim; ++r) m.entries[r * dim + c] = ordered[c][r];
  }
  return m;
}

struct AgreeOrBlock {
  std::vector<Var> slots;  // index into {a, b, c}, or 3 for unlabelled
  std::array<ScaledMatrix, 3> unitaries;
  unsigned zeroOutcomes = 0;
};

// Slots: 0 -> c, 1..3 -> b, 4..5 -> none, 6 -> a. The first query splits the
// state over a, c and an unlabelled slot; the second one reads b and c.
const AgreeOrBlock& agreeOrBlock() {
  static const AgreeOrBlock kBlock = [] {
    constexpr unsigned d = 7;
    const double r3 = std::sqrt(3.0);
    const double s = 1.0 / std::sqrt(48.0);
    const Vec uNone{s, r3 * s, -r3 * s, 0.0, 3 * s, 0.0, 0.0};
    const Vec uA{3 * s, 0.0, r3 * s, -r3 * s, 0.0, 3 * s, 0.0};
    const Vec uC{0.0, -r3 * s, 0.0, r3 * s, s, s, 0.0};
    auto norm = [](const Vec& v) { return std::sqrt(std::real(dot(v, v))); };
    auto unit = [&](Vec v) {
      const double n = norm(v);
      for (Complex& z : v) z /= n;
      return v;
    };

    AgreeOrBlock block;
    block.slots = {2, 1, 1, 1, 3, 3, 0};
    Vec start(d, 0.0);
    start[4] = norm(uNone);
    start[6] = norm(uA);
    start[0] = norm(uC);
    block.unitaries[0] = fromColumns(d, {{0, start}});
    block.unitaries[1] = fromColumns(d, {{4, unit(uNone)}, {6, unit(uA)}, {0, unit(uC)}});

    std::array<std::vector<Vec>, 2> spans;
    for (InputCode x = 0; x < 8; ++x) {
      auto sign = [&](Var slotVar) { return slotVar < 3 && ((x >> slotVar) & 1u) ? -1.0 : 1.0; };
      Vec v(d, 0.0);
      for (unsigned i = 0; i < d; ++i) v[i] = uNone[i] + sign(0) * uA[i] + sign(2) * uC[i];
      for (unsigned i = 0; i < d; ++i) v[i] *= sign(block.slots[i]);
      const bool a = x & 1u, b = (x >> 1) & 1u, c = (x >> 2) & 1u;
      extendBasis(spans[(a == b) && (a || c)], std::move(v));
    }
    block.zeroOutcomes = static_cast<unsigned>(spans[0].size());
    std::vector<Vec> rows = spans[0];
    rows.insert(rows.end(), spans[1].begin(), spans[1].end());
    rows = completeBasis(d, rows);
    ScaledMatrix last{d, Vec(std::size_t{d} * d), 0};
    for (unsigned r = 0; r < d; ++r) {
      for (unsigned c = 0; c < d; ++c) last.entries[r * d + c] = std::conj(rows[r][c]);
    }
    block.unitaries[2] = std::move(last);
    return block;
  }();
  return kBlock;
}

}  // namespace

NodePtr agreeOrProgram(const std::array<Var, 3>& vars, std::uint64_t negMask, bool invert) {
  if (vars[0] == vars[1] || vars[0] == vars[2] || vars[1] == vars[2]) {
    throw std::invalid_argument("agreeOrProgram needs three distinct variables");
  }
  const AgreeOrBlock& base = agreeOrBlock();
  UnitaryBlock block;
  block.dim = static_cast<unsigned>(base.slots.size());
  for (Var s : base.slots) block.labels.push_back(s < 3 ? std::optional<Var>(vars[s]) : std::nullopt);
  // A negated literal flips the sign of its slots at every query; fold that
  // into each unitary that follows a query.
  block.unitaries.assign(base.unitaries.begin(), base.unitaries.end());
  for (std::size_t u = 1; u < block.unitaries.size(); ++u) {
    ScaledMatrix& m = block.unitaries[u];
    for (unsigned c = 0; c < m.dim; ++c) {
      const Var s = base.slots[c];
      if (s < 3 && ((negMask >> s) & 1u)) {
        for (unsigned r = 0; r < m.dim; ++r) m.entries[r * m.dim + c] = -m.entries[r * m.dim + c];
      }
    }
  }
  for (unsigned k = 0; k < block.dim; ++k) block.outcomes.push_back(output((k >= base.zeroOutcomes) != invert));
  return make(std::move(block));
}

// Structure ------------------------------------------------------------------

namespace {

template <class F>
void forEachChild(const Node& node, F&& f) {
  std::visit(Overloaded{
                 [](const Output&) {},
                 [&](const ClassicalQuery& q) { f(q.on0, 0u); f(q.on1, 1u); },
                 [&](const XorQuery& q) { f(q.on0, 0u); f(q.on1, 1u); },
                 [&](const UnitaryBlock& b) {
                   for (unsigned k = 0; k < b.outcomes.size(); ++k) f(b.outcomes[k], k);
                 },
                 [&](const AxiomLeaf& a) { f(a.on0, 0u); f(a.on1, 1u); },
             },
             node.body);
}

unsigned ownCost(const Node& node) {
  return std::visit(Overloaded{
                        [](const Output&) { return 0u; },
                        [](const ClassicalQuery&) { return 1u; },
                        [](const XorQuery&) { return 1u; },
                        [](const UnitaryBlock& b) { return b.queries(); },
                        [](const AxiomLeaf& a) { return a.claimedQueries; },
                    },
                    node.body);
}

void requireChild(const NodePtr& child) {
  if (!child) throw std::invalid_argument("program node has a missing continuation");
}

// Visits every distinct node once.
template <class F>
void visitDistinct(const NodePtr& root, F&& f) {
  std::unordered_set<const Node*> seen;
  std::vector<const Node*> stack{root.get()};
  while (!stack.empty()) {
    const Node* node = stack.back();
    stack.pop_back();
    if (!node || !seen.insert(node).second) continue;
    f(*node);
    forEachChild(*node, [&](const NodePtr& c, unsigned) { stack.push_back(c.get()); });
  }
}

// Rebuilds a DAG bottom-up, preserving sharing. `leaf` may replace a node
// outright; otherwise children are rebuilt and `rename` maps variables.
class Rebuilder {
 public:
  std::function<NodePtr(const NodePtr&)> leaf = [](const NodePtr&) { return NodePtr{}; };
  std::function<Var(Var)> rename = [](Var v) { return v; };
  bool expandXor = false;

  NodePtr operator()(const NodePtr& node) {
    requireChild(node);
    if (auto it = memo_.find(node.get()); it != memo_.end()) return it->second;
    NodePtr result = leaf(node);
    if (!result) result = rebuild(node);
    memo_.emplace(node.get(), result);
    return result;
  }

 private:
  NodePtr rebuild(const NodePtr& node) {
    return std::visit(
        Overloaded{
            [&](const Output&) { return node; },
            [&](const ClassicalQuery& q) { return classical(rename(q.var), (*this)(q.on0), (*this)(q.on1)); },
            [&](const XorQuery& q) {
              return expandXor ? xorGadget(rename(q.i), rename(q.j), (*this)(q.on0), (*this)(q.on1))
                               : xorQuery(rename(q.i), rename(q.j), (*this)(q.on0), (*this)(q.on1));
            },
            [&](const UnitaryBlock& b) {
              UnitaryBlock copy = b;
              for (auto& l : copy.labels) {
                if (l) l = rename(*l);
              }
              for (auto& o : copy.outcomes) o = (*this)(o);
              return unitaryBlock(std::move(copy));
            },
            [&](const AxiomLeaf& a) {
              AxiomLeaf copy = a;
              for (auto& v : copy.vars) v = rename(v);
              copy.on0 = (*this)(a.on0);
              copy.on1 = (*this)(a.on1);
              return axiomLeaf(std::move(copy));
            },
        },
        node->body);
  }

  std::unordered_map<const Node*, NodePtr> memo_;
};

}  // namespace

unsigned queryCost(const NodePtr& program) {
  std::unordered_map<const Node*, unsigned> memo;
  std::function<unsigned(const NodePtr&)> cost = [&](const NodePtr& node) -> unsigned {
    requireChild(node);
    if (auto it = memo.find(node.get()); it != memo.end()) return it->second;
    unsigned worst = 0;
    forEachChild(*node, [&](const NodePtr& c, unsigned) { worst = std::max(worst, cost(c)); });
    return memo[node.get()] = ownCost(*node) + worst;
  };
  return cost(program);
}

std::size_t nodeCount(const NodePtr& program) {
  std::size_t count = 0;
  visitDistinct(program, [&](const Node&) { ++count; });
  return count;
}

unsigned requiredArity(const NodePtr& program) {
  unsigned arity = 0;
  auto see = [&](Var v) { arity = std::max(arity, v + 1); };
  visitDistinct(program, [&](const Node& node) {
    std::visit(Overloaded{
                   [](const Output&) {},
                   [&](const ClassicalQuery& q) { see(q.var); },
                   [&](const XorQuery& q) { see(q.i); see(q.j); },
                   [&](const UnitaryBlock& b) {
                     for (const auto& l : b.labels) {
                       if (l) see(*l);
                     }
                   },
                   [&](const AxiomLeaf& a) {
                     for (Var v : a.vars) see(v);
                   },
               },
               node.body);
  });
  return arity;
}

bool containsAxiom(const NodePtr& program) {
  bool found = false;
  visitDistinct(program, [&](const Node& n) { found |= std::holds_alternative<AxiomLeaf>(n.body); });
  return found;
}

bool containsQuantum(const NodePtr& program) {
  bool found = false;
  visitDistinct(program, [&](const Node& n) {
    found |= std::holds_alternative<XorQuery>(n.body) || std::holds_alternative<UnitaryBlock>(n.body);
  });
  return found;
}

std::vector<std::string> axiomLocations(const NodePtr& program) {
  std::vector<std::string> out;
  if (!containsAxiom(program)) return out;
  std::function<void(const NodePtr&, const std::string&)> walk = [&](const NodePtr& node,
                                                                     const std::string& path) {
    if (!node) return;
    if (std::holds_alternative<AxiomLeaf>(node->body)) out.push_back(path);
    forEachChild(*node, [&](const NodePtr& c, unsigned k) { walk(c, path + "/" + std::to_string(k)); });
  };
  walk(program, "$");
  return out;
}

NodePtr elaborate(const NodePtr& program) {
  Rebuilder r;
  r.expandXor = true;
  return r(program);
}

NodePtr relabel(const NodePtr& program, const std::vector<Var>& mapping) {
  Rebuilder r;
  r.rename = [&](Var v) {
    if (v >= mapping.size()) throw std::out_of_range("relabel: variable outside the mapping");
    return mapping[v];
  };
  return r(program);
}

NodePtr substituteOutputs(const NodePtr& program, const NodePtr& onFalse, const NodePtr& onTrue) {
  Rebuilder r;
  r.leaf = [&](const NodePtr& node) -> NodePtr {
    if (const auto* o = std::get_if<Output>(&node->body)) return o->value ? onTrue : onFalse;
    return nullptr;
  };
  return r(program);
}

// Simulation -----------------------------------------------------------------

void applyOracle(std::vector<Complex>& state, const std::vector<std::optional<Var>>& labels, InputCode x) {
  if (state.size() != labels.size()) throw std::invalid_argument("applyOracle: dimension mismatch");
  for (std::size_t k = 0; k < state.size(); ++k) {
    if (labels[k] && ((x >> *labels[k]) & 1u)) state[k] = -state[k];
  }
}

namespace {

// Checks bindings, shapes and unitarity with node paths in the messages.
void checkStructure(const NodePtr& program, unsigned arity) {
  std::unordered_set<const Node*> seen;
  std::function<void(const NodePtr&, const std::string&)> walk = [&](const NodePtr& node,
                                                                     const std::string& path) {
    if (!node) throw ProgramError("missing continuation", path);
    if (!seen.insert(node.get()).second) return;
    auto bound = [&](Var v) {
      if (v >= arity) {
        throw ProgramError("unbound variable x" + std::to_string(v + 1) + " for arity " + std::to_string(arity),
                           path);
      }
    };
    std::visit(Overloaded{
                   [](const Output&) {},
                   [&](const ClassicalQuery& q) { bound(q.var); },
                   [&](const XorQuery& q) {
                     bound(q.i);
                     bound(q.j);
                     if (q.i == q.j) throw ProgramError("xq with equal variables", path);
                   },
                   [&](const UnitaryBlock& b) {
                     if (b.dim == 0 || b.labels.size() != b.dim || b.outcomes.size() != b.dim ||
                         b.unitaries.empty()) {
                       throw ProgramError("malformed unitary block", path);
                     }
                     for (const auto& l : b.labels) {
                       if (l) bound(*l);
                     }
                     for (std::size_t k = 0; k < b.unitaries.size(); ++k) {
                       if (b.unitaries[k].dim != b.dim || !b.unitaries[k].isUnitary()) {
                         throw ProgramError("matrix U" + std::to_string(k + 1) + " is not unitary", path);
                       }
                     }
                   },
                   [&](const AxiomLeaf& a) {
                     if (a.vars.size() != a.arity || a.table.arity() != a.arity) {
                       throw ProgramError("axiom leaf arity does not match its variables", path);
                     }
                     for (Var v : a.vars) bound(v);
                   },
               },
               node->body);
    forEachChild(*node, [&](const NodePtr& c, unsigned k) { walk(c, path + "/" + std::to_string(k)); });
  };
  walk(program, "$");
}

class Runner {
 public:
  Runner(const TruthTable& f, bool allowAxioms) : f_(f), allowAxioms_(allowAxioms) {}

  void runInput(const NodePtr& root, InputCode x) {
    x_ = x;
    seen_[0] = seen_[1] = false;
    wrong_ = 0.0;
    maxQueries_ = 0;
    step(*root, 1.0, 0);
  }

  bool seen(bool v) const { return seen_[v]; }
  double wrong() const { return wrong_; }
  unsigned maxQueries() const { return maxQueries_; }

 private:
  void step(const Node& node, double amp, unsigned queries) {
    std::visit(Overloaded{
                   [&](const Output& o) {
                     seen_[o.value] = true;
                     maxQueries_ = std::max(maxQueries_, queries);
                     if (o.value != f_.get(x_)) wrong_ = std::max(wrong_, amp);
                   },
                   [&](const ClassicalQuery& q) {
                     step((x_ >> q.var) & 1u ? *q.on1 : *q.on0, amp, queries + 1);
                   },
                   [&](const XorQuery&) { throw std::logic_error("xq must be elaborated before simulation"); },
                   [&](const UnitaryBlock& b) { runBlock(b, amp, queries); },
                   [&](const AxiomLeaf& a) {
                     if (!allowAxioms_) throw std::logic_error("axiom leaf reached in plain simulation");
                     InputCode sub = 0;
                     for (std::size_t k = 0; k < a.vars.size(); ++k) sub |= ((x_ >> a.vars[k]) & 1u) << k;
                     step(a.table.get(sub) ? *a.on1 : *a.on0, amp, queries + a.claimedQueries);
                   },
               },
               node.body);
  }

  void runBlock(const UnitaryBlock& b, double amp, unsigned queries) {
    std::vector<Complex> state(b.dim, 0.0);
    std::vector<Complex> next(b.dim);
    state[0] = 1.0;
    for (std::size_t u = 0; u < b.unitaries.size(); ++u) {
      if (u > 0) applyOracle(state, b.labels, x_);
      const ScaledMatrix& m = b.unitaries[u];
      for (unsigned r = 0; r < b.dim; ++r) {
        Complex sum = 0.0;
        for (unsigned c = 0; c < b.dim; ++c) sum += m.at(r, c) * state[c];
        next[r] = sum;
      }
      state.swap(next);
    }
    for (unsigned k = 0; k < b.dim; ++k) {
      const double a = std::abs(state[k]);
      if (a > kEpsilon) {
        step(*b.outcomes[k], amp * a, queries + b.queries());
      } else {
        wrong_ = std::max(wrong_, amp * a);
      }
    }
  }

  const TruthTable& f_;
  bool allowAxioms_;
  InputCode x_ = 0;
  bool seen_[2] = {false, false};
  double wrong_ = 0.0;
  unsigned maxQueries_ = 0;
};

SimulationReport run(const NodePtr& program, const TruthTable& f, bool allowAxioms) {
  if (!program) throw ProgramError("empty program", "$");
  if (!allowAxioms && containsAxiom(program)) throw NotSimulatableError(axiomLocations(program));
  checkStructure(program, f.arity());
  const NodePtr elaborated = elaborate(program);

  SimulationReport report;
  report.arity = f.arity();
  report.perInputOutcomes.resize(f.size());
  Runner runner(f, allowAxioms);
  for (InputCode x = 0; x < f.size(); ++x) {
    runner.runInput(elaborated, x);
    report.perInputOutcomes[x] = runner.seen(0) && runner.seen(1) ? -1 : (runner.seen(1) ? 1 : 0);
    report.worstWrongAmplitude = std::max(report.worstWrongAmplitude, runner.wrong());
    report.queriesUsedWorstCase = std::max(report.queriesUsedWorstCase, runner.maxQueries());
    if (runner.wrong() > kEpsilon) report.failingInputs.push_back(x);
  }
  report.exact = report.worstWrongAmplitude <= kEpsilon;
  return report;
}

}  // namespace

SimulationReport simulate(const NodePtr& program, const TruthTable& f) { return run(program, f, false); }

SimulationReport simulateWithAxioms(const NodePtr& program, const TruthTable& f) {
  return run(program, f, true);
}

// Axiom table ------------------------------------------------------------------

namespace {

std::optional<unsigned> parseNumber(std::string_view s) {
  if (s.empty() || s.size() > 2) return std::nullopt;
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

SymmetricProfile profileWhere(unsigned n, auto pred) {
  SymmetricProfile p;
  for (unsigned w = 0; w <= n; ++w) p.bits.push_back(pred(w));
  return p;
}

}  // namespace

std::optional<AxiomRow> axiomRow(const std::string& classId) {
  if (classId == "AND_OR_3") {
    return AxiomRow{classId, 3, 2, "MJM11",
                    TruthTable::fromPredicate(3, [](InputCode m) { return (m & 1u) && (m & 6u); })};
  }
  const std::string_view id = classId;
  auto family = [&](std::string_view prefix) -> std::optional<std::string_view> {
    if (id.substr(0, prefix.size()) == prefix) return id.substr(prefix.size());
    return std::nullopt;
  };
  for (std::string_view prefix : {"EXACT_", "TH_"}) {
    auto rest = family(prefix);
    if (!rest) continue;
    const auto caret = rest->find('^');
    if (caret == std::string_view::npos) return std::nullopt;
    const auto n = parseNumber(rest->substr(0, caret));
    const auto k = parseNumber(rest->substr(caret + 1));
    if (!n || !k || *n == 0 || *n > TruthTable::kMaxArity || *k > *n) return std::nullopt;
    if (prefix == "EXACT_") {
      return AxiomRow{classId, *n, std::max(*k, *n - *k), "AISJ13",
                      fromProfile(profileWhere(*n, [&](unsigned w) { return w == *k; }))};
    }
    if (*k == 0) return std::nullopt;
    return AxiomRow{classId, *n, std::max(*k, *n - *k + 1), "AISJ13",
                    fromProfile(profileWhere(*n, [&](unsigned w) { return w >= *k; }))};
  }
  for (std::string_view prefix : {"AND_", "OR_"}) {
    auto rest = family(prefix);
    if (!rest) continue;
    const auto n = parseNumber(*rest);
    if (!n || *n == 0 || *n > TruthTable::kMaxArity) return std::nullopt;
    const bool isAnd = prefix == "AND_";
    return AxiomRow{classId, *n, *n, "BBC+98",
                    fromProfile(profileWhere(*n, [&](unsigned w) { return isAnd ? w == *n : w >= 1; }))};
  }
  return std::nullopt;
}

std::vector<AxiomRow> axiomTable(unsigned maxArity) {
  std::vector<AxiomRow> rows;
  for (unsigned n = 1; n <= maxArity; ++n) {
    const std::string ns = std::to_string(n);
    for (unsigned k = 0; k <= n; ++k) rows.push_back(*axiomRow("EXACT_" + ns + "^" + std::to_string(k)));
    for (unsigned k = 1; k <= n; ++k) rows.push_back(*axiomRow("TH_" + ns + "^" + std::to_string(k)));
    rows.push_back(*axiomRow("AND_" + ns));
    rows.push_back(*axiomRow("OR_" + ns));
    if (n == 3) rows.push_back(*axiomRow("AND_OR_3"));
  }
  return rows;
}

}  // namespace exactq
