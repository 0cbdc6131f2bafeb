#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "exactq/program.hpp"

namespace exactq {

inline constexpr const char* kProgramSchema = "exactq.program/1";

class JsonFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Node kinds: output | cq | xq | ub | axiom. Variables are written 1-based.
nlohmann::json nodeToJson(const NodePtr& node);
NodePtr nodeFromJson(const nlohmann::json& j);

/// {"schema", "arity", "root"}
nlohmann::json programToJson(const NodePtr& program, unsigned arity);
struct ProgramDocument {
  NodePtr root;
  unsigned arity = 0;
};
ProgramDocument programFromJson(const nlohmann::json& j);

}  // namespace exactq
