#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sdres {

enum class ErrorKind {
  InvalidArgument,
  NotDivisible,
  MissingSymbol,
  ZeroPolynomial,
  DimensionMismatch,
  NotEssential,
  RankDrop,
  JacobiUndefined,
  CorankLost,
  NoEssentialSubset,
  DegenerateLattice,
  DegenerateLifting,
  ZeroDenominator,
  SyntaxError,
  DuplicateVariable,
  NonGenericTerm,
  RetriesExhausted,
};

std::string_view to_string(ErrorKind kind);

// Input-side errors map to CLI exit code 1, everything else to 2.
bool is_input_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& stage() const noexcept { return stage_; }

  // Returns a copy tagged with the pipeline stage that raised it.
  Error with_stage(std::string stage) const {
    Error e(*this);
    e.stage_ = std::move(stage);
    return e;
  }

 private:
  ErrorKind kind_;
  std::string stage_;
};

}  // namespace sdres
