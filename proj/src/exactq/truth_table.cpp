#include "exactq/truth_table.hpp"

#include <bit>
#include <stdexcept>

namespace exactq {

namespace {

constexpr std::uint64_t kVarZero[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
    0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull,
};

std::size_t wordCount(unsigned arity) {
  return arity <= 6 ? 1 : std::size_t{1} << (arity - 6);
}

std::uint64_t tailMask(unsigned arity) {
  return arity >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (std::uint64_t{1} << arity)) - 1;
}

}  // namespace

std::uint64_t varZeroMask(Var var) {
  if (var >= 6) throw std::out_of_range("varZeroMask: variable index must be < 6");
  return kVarZero[var];
}

TruthTable::TruthTable(unsigned arity) : arity_(arity) {
  if (arity > kMaxArity) {
    throw std::out_of_range("truth table arity " + std::to_string(arity) + " exceeds " +
                            std::to_string(kMaxArity));
  }
  words_.assign(wordCount(arity), 0);
}

TruthTable TruthTable::constant(unsigned arity, bool value) {
  TruthTable t(arity);
  if (value) {
    for (auto& w : t.words_) w = ~std::uint64_t{0};
    t.clearTail();
  }
  return t;
}

TruthTable TruthTable::variable(unsigned arity, Var var) {
  if (var >= arity) throw std::out_of_range("variable index out of range");
  TruthTable t(arity);
  if (var < 6) {
    for (auto& w : t.words_) w = ~kVarZero[var];
    t.clearTail();
  } else {
    const std::size_t block = std::size_t{1} << (var - 6);
    for (std::size_t k = 0; k < t.words_.size(); ++k) {
      if ((k / block) & 1u) t.words_[k] = ~std::uint64_t{0};
    }
  }
  return t;
}

TruthTable TruthTable::fromWord(unsigned arity, std::uint64_t bits) {
  if (arity > 6) throw std::out_of_range("fromWord: arity must be <= 6");
  TruthTable t(arity);
  t.words_[0] = bits;
  t.clearTail();
  return t;
}

void TruthTable::clearTail() { words_[0] &= tailMask(arity_); }

std::uint64_t TruthTable::popcount() const {
  std::uint64_t total = 0;
  for (auto w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

bool TruthTable::isZero() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool TruthTable::isConstant() const {
  if (arity_ < 6) {
    return words_[0] == 0 || words_[0] == tailMask(arity_);
  }
  const std::uint64_t first = words_[0];
  if (first != 0 && first != ~std::uint64_t{0}) return false;
  for (auto w : words_) {
    if (w != first) return false;
  }
  return true;
}

std::uint64_t TruthTable::asWord() const {
  if (arity_ > 6) throw std::out_of_range("asWord: arity must be <= 6");
  return words_[0];
}

TruthTable TruthTable::operator~() const {
  TruthTable t = *this;
  for (auto& w : t.words_) w = ~w;
  t.clearTail();
  return t;
}

TruthTable& TruthTable::operator&=(const TruthTable& other) {
  if (other.arity_ != arity_) throw std::invalid_argument("arity mismatch in &");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

TruthTable& TruthTable::operator|=(const TruthTable& other) {
  if (other.arity_ != arity_) throw std::invalid_argument("arity mismatch in |");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
  return *this;
}

TruthTable& TruthTable::operator^=(const TruthTable& other) {
  if (other.arity_ != arity_) throw std::invalid_argument("arity mismatch in ^");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

std::size_t TruthTable::hash() const {
  // FNV-1a over the words, seeded with the arity.
  std::uint64_t h = 1469598103934665603ull ^ arity_;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

std::string TruthTable::toBin() const {
  std::string out(size(), '0');
  for (InputCode m = 0; m < size(); ++m) {
    if (get(m)) out[m] = '1';
  }
  return out;
}

std::string TruthTable::toHex() const {
  if (arity_ < 2) throw std::invalid_argument("hex format needs at least 2 variables");
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(size() / 4);
  for (InputCode m = 0; m < size(); m += 4) {
    const unsigned digit = (get(m) << 3) | (get(m + 1) << 2) | (get(m + 2) << 1) | get(m + 3);
    out.push_back(kDigits[digit]);
  }
  return out;
}

bool lexLess(const TruthTable& a, const TruthTable& b) {
  if (a.arity() != b.arity()) return a.arity() < b.arity();
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t k = 0; k < wa.size(); ++k) {
    if (wa[k] != wb[k]) return lexLessWord(wa[k], wb[k]);
  }
  return false;
}

}  // namespace exactq
