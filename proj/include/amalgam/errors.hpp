#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace amalgam {

// Base of all domain errors. name() is the stable machine-readable
// identifier the CLI emits in error JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

struct DivisibilityError : Error {
  explicit DivisibilityError(const std::string& what)
      : Error("DivisibilityError", what) {}
};

struct RangeError : Error {
  explicit RangeError(const std::string& what) : Error("RangeError", what) {}
};

// Carries the byte offset of the first invalid character.
struct SyntaxError : Error {
  SyntaxError(const std::string& what, std::size_t offset)
      : Error("SyntaxError",
              what + " at byte offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

struct ParamMismatch : Error {
  explicit ParamMismatch(const std::string& what)
      : Error("ParamMismatch", what) {}
};

struct RelationViolation : Error {
  explicit RelationViolation(const std::string& what)
      : Error("RelationViolation", what) {}
};

struct MalformedPermutation : Error {
  explicit MalformedPermutation(const std::string& what)
      : Error("MalformedPermutation", what) {}
};

}  // namespace amalgam
