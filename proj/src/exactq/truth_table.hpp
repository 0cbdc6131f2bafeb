#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace exactq {

/// Index into a truth table. Bit i of the code is the value of variable x_{i+1}.
using InputCode = std::uint64_t;

/// Variables are 0-based in memory (x1 is variable 0); text formats are 1-based.
using Var = unsigned;

/// Truth table of f : {0,1}^n -> {0,1}, packed 64 entries per word.
///
/// Entry m lives at bit (m % 64) of word (m / 64). For n < 6 only the low 2^n
/// bits of the single word are meaningful; the remaining bits are kept zero so
/// that equality and hashing can work word by word.
class TruthTable {
 public:
  static constexpr unsigned kMaxArity = 24;

  TruthTable() : TruthTable(0) {}
  explicit TruthTable(unsigned arity);

  static TruthTable constant(unsigned arity, bool value);
  /// The projection x_{var+1} as a function of `arity` variables.
  static TruthTable variable(unsigned arity, Var var);
  /// Arity <= 6 only; bits beyond 2^arity are ignored.
  static TruthTable fromWord(unsigned arity, std::uint64_t bits);

  template <class Predicate>
  static TruthTable fromPredicate(unsigned arity, Predicate&& pred) {
    TruthTable t(arity);
    for (InputCode m = 0; m < t.size(); ++m) {
      if (pred(m)) t.set(m, true);
    }
    return t;
  }

  unsigned arity() const { return arity_; }
  std::uint64_t size() const { return std::uint64_t{1} << arity_; }

  bool get(InputCode m) const { return (words_[m >> 6] >> (m & 63)) & 1u; }
  bool operator[](InputCode m) const { return get(m); }
  void set(InputCode m, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (m & 63);
    if (value) {
      words_[m >> 6] |= bit;
    } else {
      words_[m >> 6] &= ~bit;
    }
  }

  std::uint64_t popcount() const;
  bool isConstant() const;
  bool isZero() const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> mutableWords() { return words_; }
  /// The whole table as one word; requires arity <= 6.
  std::uint64_t asWord() const;

  TruthTable operator~() const;
  TruthTable& operator&=(const TruthTable& other);
  TruthTable& operator|=(const TruthTable& other);
  TruthTable& operator^=(const TruthTable& other);

  bool operator==(const TruthTable& other) const = default;

  std::size_t hash() const;

  /// `bin:` payload: 2^n characters, entry 0 first.
  std::string toBin() const;
  /// `hex:` payload: each digit is four consecutive `bin` characters read as a
  /// binary numeral, first character most significant. Requires arity >= 2.
  std::string toHex() const;

 private:
  void clearTail();

  unsigned arity_;
  std::vector<std::uint64_t> words_;
};

inline TruthTable operator&(TruthTable a, const TruthTable& b) { return a &= b; }
inline TruthTable operator|(TruthTable a, const TruthTable& b) { return a |= b; }
inline TruthTable operator^(TruthTable a, const TruthTable& b) { return a ^= b; }

struct TruthTableHash {
  std::size_t operator()(const TruthTable& t) const { return t.hash(); }
};

/// Order of the `bin:` strings: entry 0 is the most significant position.
/// Tables of different arity order by arity first.
bool lexLess(const TruthTable& a, const TruthTable& b);

/// Same order on single words holding 2^n <= 64 entries.
inline bool lexLessWord(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) == 0;
}

/// Mask of positions (within one word) whose input code has bit `var` clear.
std::uint64_t varZeroMask(Var var);

}  // namespace exactq
