#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace starter_forge {

enum class ErrorKind {
  InvalidOrder,
  RepeatedElement,
  ZeroElement,
  WrongCount,
  DegeneratePair,
  InvalidOrientation,
  InvalidCover,
  InvalidNucleus,
  OrderMismatch,
  SearchInfeasible,
  InvalidSequence,
  NotSkolemStarter,
  Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so the CLI can map it to
// an exit code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace starter_forge
