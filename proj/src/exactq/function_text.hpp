#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "exactq/truth_table.hpp"

namespace exactq {

class FunctionParseError : public std::runtime_error {
 public:
  FunctionParseError(const std::string& message, std::string token)
      : std::runtime_error(message + " (near '" + token + "')"), token_(std::move(token)) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

/// Accepts `bin:<bits>`, `hex:<digits>`, `profile:b0,...,bn` and `formula:<expr>`.
TruthTable parseFunction(std::string_view text);

/// `bin:` for arity <= 6, `hex:` above.
std::string formatFunction(const TruthTable& f);

}  // namespace exactq
