#include "exactq/boolfun.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace exactq {

namespace {

void requireVar(const TruthTable& f, Var var, const char* what) {
  if (var >= f.arity()) {
    throw std::out_of_range(std::string(what) + ": variable x" + std::to_string(var + 1) +
                            " out of range for arity " + std::to_string(f.arity()));
  }
}

// Packs the 32 entries of `x` whose index has bit `var` clear into the low half.
std::uint64_t compressWord(std::uint64_t x, Var var) {
  x &= varZeroMask(var);
  for (unsigned j = var; j < 5; ++j) {
    x = (x | (x >> (1u << j))) & varZeroMask(j + 1);
  }
  return x;
}

std::uint64_t flipVarWord(std::uint64_t w, Var var) {
  const std::uint64_t mask = varZeroMask(var);
  const unsigned shift = 1u << var;
  return ((w & mask) << shift) | ((w >> shift) & mask);
}

InputCode removeBit(InputCode code, unsigned pos) {
  const InputCode low = code & ((InputCode{1} << pos) - 1);
  return ((code >> (pos + 1)) << pos) | low;
}

std::uint64_t tailOf(unsigned arity) {
  return arity >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (std::uint64_t{1} << arity)) - 1;
}

}  // namespace

// ---------------------------------------------------------------------------

TruthTable restrict(const TruthTable& f, Var var, bool value) {
  requireVar(f, var, "restrict");
  const unsigned n = f.arity();
  if (n <= 6) {
    std::uint64_t w = f.asWord();
    if (value) w >>= (1u << var);
    return TruthTable::fromWord(n - 1, compressWord(w, var));
  }
  TruthTable out(n - 1);
  const auto in = f.words();
  auto dst = out.mutableWords();
  if (var >= 6) {
    const std::size_t block = std::size_t{1} << (var - 6);
    for (std::size_t k = 0; k < dst.size(); ++k) {
      dst[k] = in[(k / block) * 2 * block + (value ? block : 0) + k % block];
    }
  } else {
    const unsigned shift = value ? (1u << var) : 0u;
    for (std::size_t k = 0; k < dst.size(); ++k) {
      dst[k] = compressWord(in[2 * k] >> shift, var) |
               (compressWord(in[2 * k + 1] >> shift, var) << 32);
    }
  }
  return out;
}

TruthTable combineCofactors(const TruthTable& f0, const TruthTable& f1, Var var) {
  if (f0.arity() != f1.arity()) throw std::invalid_argument("combineCofactors: arity mismatch");
  const unsigned n = f0.arity() + 1;
  if (var >= n) throw std::out_of_range("combineCofactors: variable out of range");
  return TruthTable::fromPredicate(n, [&](InputCode m) {
    const InputCode sub = removeBit(m, var);
    return ((m >> var) & 1u) ? f1.get(sub) : f0.get(sub);
  });
}

TruthTable substituteXor(const TruthTable& f, Var keep, Var other, bool c) {
  requireVar(f, keep, "substituteXor");
  requireVar(f, other, "substituteXor");
  if (keep == other) throw std::invalid_argument("substituteXor: variables must differ");
  const Var keepLocal = keep < other ? keep : keep - 1;
  return TruthTable::fromPredicate(f.arity() - 1, [&](InputCode y) {
    const bool xk = (y >> keepLocal) & 1u;
    return f.get(insertBit(y, other, xk != c));
  });
}

bool dependsOn(const TruthTable& f, Var var) {
  requireVar(f, var, "dependsOn");
  const auto w = f.words();
  if (var < 6) {
    const std::uint64_t mask = varZeroMask(var);
    const unsigned shift = 1u << var;
    for (auto word : w) {
      if (((word >> shift) ^ word) & mask) return true;
    }
    return false;
  }
  const std::size_t block = std::size_t{1} << (var - 6);
  for (std::size_t base = 0; base < w.size(); base += 2 * block) {
    for (std::size_t k = 0; k < block; ++k) {
      if (w[base + k] != w[base + block + k]) return true;
    }
  }
  return false;
}

std::vector<Var> essentialVariables(const TruthTable& f) {
  std::vector<Var> vars;
  for (Var v = 0; v < f.arity(); ++v) {
    if (dependsOn(f, v)) vars.push_back(v);
  }
  return vars;
}

ReducedFunction reduceToEssential(const TruthTable& f) {
  ReducedFunction r{f, {}};
  for (Var v = f.arity(); v-- > 0;) {
    if (dependsOn(r.table, v)) {
      r.vars.push_back(v);
    } else {
      r.table = restrict(r.table, v, false);
    }
  }
  std::reverse(r.vars.begin(), r.vars.end());
  return r;
}

// ---------------------------------------------------------------------------

SymmetricProfile SymmetricProfile::reversed() const {
  SymmetricProfile p = *this;
  std::reverse(p.bits.begin(), p.bits.end());
  return p;
}

SymmetricProfile SymmetricProfile::complemented() const {
  SymmetricProfile p = *this;
  p.bits.flip();
  return p;
}

std::string SymmetricProfile::toString() const {
  std::string out;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (k) out.push_back(',');
    out.push_back(bits[k] ? '1' : '0');
  }
  return out;
}

std::optional<SymmetricProfile> symmetricProfile(const TruthTable& f) {
  const unsigned n = f.arity();
  std::vector<int> seen(n + 1, -1);
  for (InputCode m = 0; m < f.size(); ++m) {
    const int w = std::popcount(m);
    const int v = f.get(m) ? 1 : 0;
    if (seen[w] < 0) {
      seen[w] = v;
    } else if (seen[w] != v) {
      return std::nullopt;
    }
  }
  SymmetricProfile p;
  p.bits.reserve(n + 1);
  for (int v : seen) p.bits.push_back(v == 1);
  return p;
}

TruthTable fromProfile(const SymmetricProfile& profile) {
  if (profile.bits.empty()) throw std::invalid_argument("empty symmetric profile");
  return TruthTable::fromPredicate(profile.arity(),
                                   [&](InputCode m) { return profile.bits[std::popcount(m)]; });
}

namespace {

std::string directSymmetricName(const std::vector<bool>& b) {
  const unsigned n = static_cast<unsigned>(b.size()) - 1;
  const std::string ns = std::to_string(n);
  if (std::all_of(b.begin(), b.end(), [&](bool v) { return v == b[0]; })) return "constant";
  const auto ones = static_cast<unsigned>(std::count(b.begin(), b.end(), true));
  if (ones == 1 && b[n]) return "AND_" + ns;
  bool alternating = !b[0];
  for (unsigned k = 1; k <= n && alternating; ++k) alternating = b[k] != b[k - 1];
  if (alternating) return "PARITY_" + ns;
  if (n >= 2 && !b[0] && !b[n] && ones == n - 1) return "NAE_" + ns;
  if (ones == 1) {
    const auto k = static_cast<unsigned>(std::find(b.begin(), b.end(), true) - b.begin());
    if (k >= 1 && k + 1 <= n) return "EXACT_" + ns + "^" + std::to_string(k);
  }
  // 0^k 1^(n-k+1)
  const auto firstOne = static_cast<unsigned>(std::find(b.begin(), b.end(), true) - b.begin());
  if (firstOne >= 2 && firstOne + 1 <= n && ones == n - firstOne + 1) {
    return "TH_" + ns + "^" + std::to_string(firstOne);
  }
  return "";
}

}  // namespace

std::string symmetricClassName(const SymmetricProfile& profile) {
  const std::string direct = directSymmetricName(profile.bits);
  if (!direct.empty()) return direct;
  for (const auto& variant :
       {profile.complemented(), profile.reversed(), profile.complemented().reversed()}) {
    const std::string name = directSymmetricName(variant.bits);
    if (!name.empty()) return "isomorphic to " + name;
  }
  return "unnamed";
}

// ---------------------------------------------------------------------------

Unateness unateness(const TruthTable& f, Var var) {
  const TruthTable r0 = restrict(f, var, false);
  const TruthTable r1 = restrict(f, var, true);
  if (r0 == r1) return Unateness::Independent;
  if ((r0 & ~r1).isZero()) return Unateness::Positive;
  if ((r1 & ~r0).isZero()) return Unateness::Negative;
  return Unateness::Binate;
}

bool isMonotone(const TruthTable& f) {
  for (Var v = 0; v < f.arity(); ++v) {
    const Unateness u = unateness(f, v);
    if (u == Unateness::Negative || u == Unateness::Binate) return false;
  }
  return true;
}

namespace {

VarSet varsOf(InputCode m, unsigned arity) {
  VarSet s;
  for (Var v = 0; v < arity; ++v) {
    if ((m >> v) & 1u) s.push_back(v);
  }
  return s;
}

}  // namespace

MonotoneNormalForm primeNormalForms(const TruthTable& f) {
  if (f.isConstant()) throw std::invalid_argument("primeNormalForms: constant function");
  if (!isMonotone(f)) throw std::invalid_argument("primeNormalForms: function is not monotone");
  const unsigned n = f.arity();
  MonotoneNormalForm forms;
  for (InputCode m = 0; m < f.size(); ++m) {
    if (f.get(m)) {
      bool minimal = true;
      for (Var v = 0; v < n && minimal; ++v) {
        if (((m >> v) & 1u) && f.get(m & ~(InputCode{1} << v))) minimal = false;
      }
      if (minimal) forms.dnfTerms.insert(varsOf(m, n));
    } else {
      bool maximal = true;
      for (Var v = 0; v < n && maximal; ++v) {
        if (!((m >> v) & 1u) && !f.get(m | (InputCode{1} << v))) maximal = false;
      }
      if (maximal) forms.cnfClauses.insert(varsOf(~m & (f.size() - 1), n));
    }
  }
  return forms;
}

TruthTable fromDnf(unsigned arity, const std::set<VarSet>& terms) {
  TruthTable out(arity);
  for (const auto& term : terms) {
    TruthTable t = TruthTable::constant(arity, true);
    for (Var v : term) t &= TruthTable::variable(arity, v);
    out |= t;
  }
  return out;
}

TruthTable fromCnf(unsigned arity, const std::set<VarSet>& clauses) {
  TruthTable out = TruthTable::constant(arity, true);
  for (const auto& clause : clauses) {
    TruthTable c(arity);
    for (Var v : clause) c |= TruthTable::variable(arity, v);
    out &= c;
  }
  return out;
}

// ---------------------------------------------------------------------------

NpnTransform NpnTransform::identity(unsigned arity) {
  NpnTransform t;
  t.perm.resize(arity);
  std::iota(t.perm.begin(), t.perm.end(), Var{0});
  return t;
}

NpnTransform NpnTransform::then(const NpnTransform& first, const NpnTransform& second) {
  if (first.arity() != second.arity()) throw std::invalid_argument("NpnTransform: arity mismatch");
  const unsigned n = first.arity();
  NpnTransform out;
  out.perm.resize(n);
  out.inputNeg = second.inputNeg;
  for (Var i = 0; i < n; ++i) {
    out.perm[i] = first.perm[second.perm[i]];
    if ((first.inputNeg >> second.perm[i]) & 1u) out.inputNeg ^= std::uint64_t{1} << i;
  }
  out.outputNeg = first.outputNeg != second.outputNeg;
  return out;
}

NpnTransform NpnTransform::inverse() const {
  const unsigned n = arity();
  NpnTransform out;
  out.perm.resize(n);
  for (Var i = 0; i < n; ++i) out.perm[perm[i]] = i;
  for (Var i = 0; i < n; ++i) {
    if ((inputNeg >> out.perm[i]) & 1u) out.inputNeg |= std::uint64_t{1} << i;
  }
  out.outputNeg = outputNeg;
  return out;
}

TruthTable apply(const NpnTransform& t, const TruthTable& f) {
  if (t.arity() != f.arity()) throw std::invalid_argument("apply: transform arity mismatch");
  const unsigned n = f.arity();
  return TruthTable::fromPredicate(n, [&](InputCode x) {
    const InputCode z = x ^ t.inputNeg;
    InputCode y = 0;
    for (Var i = 0; i < n; ++i) y |= ((z >> i) & 1u) << t.perm[i];
    return f.get(y) != t.outputNeg;
  });
}

NpnCanonical npnCanonical(const TruthTable& f) {
  const unsigned n = f.arity();
  if (n > kMaxNpnArity) {
    throw std::out_of_range("npnCanonical supports arity <= " + std::to_string(kMaxNpnArity));
  }
  const std::uint64_t tail = tailOf(n);
  const std::uint64_t source = f.asWord();
  const std::uint64_t size = f.size();

  std::vector<Var> perm(n);
  std::iota(perm.begin(), perm.end(), Var{0});
  std::uint64_t best = ~std::uint64_t{0};
  bool haveBest = false;
  NpnTransform witness = NpnTransform::identity(n);

  auto consider = [&](std::uint64_t w, std::uint64_t neg) {
    for (bool out : {false, true}) {
      const std::uint64_t cand = out ? (~w & tail) : w;
      if (!haveBest || lexLessWord(cand, best)) {
        best = cand;
        haveBest = true;
        witness.perm = perm;
        witness.inputNeg = neg;
        witness.outputNeg = out;
      }
    }
  };

  do {
    std::uint64_t h = 0;
    for (InputCode m = 0; m < size; ++m) {
      InputCode y = 0;
      for (Var i = 0; i < n; ++i) y |= ((m >> i) & 1u) << perm[i];
      h |= ((source >> y) & 1u) << m;
    }
    std::uint64_t neg = 0;
    consider(h, neg);
    for (std::uint64_t k = 1; k < (std::uint64_t{1} << n); ++k) {
      const Var v = static_cast<Var>(std::countr_zero(k));
      h = flipVarWord(h, v);
      neg ^= std::uint64_t{1} << v;
      consider(h, neg);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  return {TruthTable::fromWord(n, best), witness};
}

bool isAndIsomorphic(const TruthTable& f) {
  if (f.arity() == 0) return false;
  const std::uint64_t ones = f.popcount();
  return ones == 1 || ones == f.size() - 1;
}

// ---------------------------------------------------------------------------

MultilinearPoly::MultilinearPoly(unsigned arity, std::vector<std::int64_t> coeffs)
    : arity_(arity), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != (std::size_t{1} << arity_)) {
    throw std::invalid_argument("MultilinearPoly: need 2^n coefficients");
  }
}

unsigned MultilinearPoly::degree() const {
  unsigned d = 0;
  for (std::uint64_t s = 0; s < coeffs_.size(); ++s) {
    if (coeffs_[s] != 0) d = std::max(d, static_cast<unsigned>(std::popcount(s)));
  }
  return d;
}

std::int64_t MultilinearPoly::evaluate(InputCode x) const {
  std::int64_t total = coeffs_[0];
  for (InputCode s = x; s != 0; s = (s - 1) & x) total += coeffs_[s];
  return total;
}

std::string MultilinearPoly::toString() const {
  std::vector<std::uint64_t> order(coeffs_.size());
  std::iota(order.begin(), order.end(), std::uint64_t{0});
  std::stable_sort(order.begin(), order.end(), [](std::uint64_t a, std::uint64_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  std::string out;
  for (std::uint64_t s : order) {
    const std::int64_t c = coeffs_[s];
    if (c == 0) continue;
    const std::uint64_t mag = static_cast<std::uint64_t>(c < 0 ? -c : c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string monomial;
    for (Var v = 0; v < arity_; ++v) {
      if ((s >> v) & 1u) {
        if (!monomial.empty()) monomial += "*";
        monomial += "x" + std::to_string(v + 1);
      }
    }
    if (monomial.empty()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += monomial;
    }
  }
  return out.empty() ? "0" : out;
}

MultilinearPoly multilinear(const TruthTable& f) {
  const unsigned n = f.arity();
  if (n > kMaxPolynomialArity) {
    throw std::out_of_range("multilinear supports arity <= " + std::to_string(kMaxPolynomialArity));
  }
  std::vector<std::int64_t> a(f.size());
  for (InputCode m = 0; m < f.size(); ++m) a[m] = f.get(m) ? 1 : 0;
  // Moebius inversion over the subset lattice.
  for (Var v = 0; v < n; ++v) {
    const std::uint64_t bit = std::uint64_t{1} << v;
    for (std::uint64_t s = 0; s < a.size(); ++s) {
      if (s & bit) a[s] -= a[s ^ bit];
    }
  }
  return MultilinearPoly(n, std::move(a));
}

unsigned degree(const TruthTable& f) { return multilinear(f).degree(); }

// ---------------------------------------------------------------------------

namespace {

// Exact depth of every function of at most four variables, indexed by the
// 16-entry table (functions of fewer variables are replicated up to four).
const std::array<std::uint8_t, 65536>& smallDepthTable() {
  static const std::array<std::uint8_t, 65536> table = [] {
    std::array<std::uint8_t, 65536> d{};
    d.fill(0xFF);
    auto solve = [&](auto&& self, std::uint32_t t) -> std::uint8_t {
      if (d[t] != 0xFF) return d[t];
      if (t == 0 || t == 0xFFFF) return d[t] = 0;
      std::uint8_t best = 4;
      for (Var v = 0; v < 4; ++v) {
        const auto mask = static_cast<std::uint32_t>(varZeroMask(v) & 0xFFFF);
        const unsigned s = 1u << v;
        const std::uint32_t lo = t & mask;
        const std::uint32_t hi = t & ~mask & 0xFFFF;
        const std::uint32_t c0 = lo | (lo << s);
        const std::uint32_t c1 = hi | (hi >> s);
        if (c0 == c1) continue;
        best = std::min<std::uint8_t>(best, 1 + std::max(self(self, c0), self(self, c1)));
      }
      return d[t] = best;
    };
    for (std::uint32_t t = 0; t < 65536; ++t) solve(solve, t);
    return d;
  }();
  return table;
}

unsigned smallDepth(const TruthTable& g) {
  std::uint64_t w = g.asWord();
  for (std::uint64_t size = g.size(); size < 16; size <<= 1) w |= w << size;
  return smallDepthTable()[w & 0xFFFF];
}

// Answers "is there a decision tree of depth <= budget" on functions with no
// dead variables, memoizing proven lower/upper bounds per table.
class DepthSolver {
 public:
  unsigned depth(const TruthTable& f) {
    const TruthTable g = reduceToEssential(f).table;
    const unsigned k = g.arity();
    if (k == 0) return 0;
    if (k <= 4) return smallDepth(g);
    unsigned d = k;
    while (d > 1 && decidable(g, d - 1)) --d;
    return d;
  }

 private:
  struct Bounds {
    unsigned lo;
    unsigned hi;
  };

  bool decidable(const TruthTable& g, unsigned budget) {
    const unsigned k = g.arity();
    if (k == 0 || budget >= k) return true;
    if (budget == 0) return false;
    if (k <= 4) return smallDepth(g) <= budget;
    if (auto it = memo_.find(g); it != memo_.end()) {
      if (budget >= it->second.hi) return true;
      if (budget < it->second.lo) return false;
    }
    for (Var v = 0; v < k; ++v) {
      const TruthTable c0 = reduceToEssential(restrict(g, v, false)).table;
      if (!decidable(c0, budget - 1)) continue;
      const TruthTable c1 = reduceToEssential(restrict(g, v, true)).table;
      if (decidable(c1, budget - 1)) {
        auto& b = memo_.try_emplace(g, Bounds{1, k}).first->second;
        b.hi = std::min(b.hi, budget);
        return true;
      }
    }
    auto& b = memo_.try_emplace(g, Bounds{1, k}).first->second;
    b.lo = std::max(b.lo, budget + 1);
    return false;
  }

  std::unordered_map<TruthTable, Bounds, TruthTableHash> memo_;
};

}  // namespace

unsigned decisionTreeDepth(const TruthTable& f) {
  if (f.arity() > kMaxDepthArity) {
    throw std::out_of_range("decisionTreeDepth supports arity <= " + std::to_string(kMaxDepthArity));
  }
  DepthSolver solver;
  return solver.depth(f);
}

}  // namespace exactq
