#pragma once

#include <stdexcept>
#include <string>

namespace hlmenger {

enum class ErrorCode {
  InvalidArgument,
  VertexOutOfRange,
  DuplicateEdge,
  SelfLoop,
  ForeignEdge,
  DimensionMismatch,
  InvalidBijection,
  Parse,
  BudgetExceeded,
  Integrity,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so the C
// layer can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hlmenger
