#pragma once

#include <stdexcept>
#include <string>

namespace bgg {

enum class ErrorKind {
  NotFiniteType,
  NotIrreducible,
  UnknownRoot,
  NonDominant,
  DimensionOverBudget,
  NotCompletelyReducibleInput,
  DegreeOverflow,
  UncertifiedInput,
  ShapeMismatch,
  SingularLaplacianBlock,
  CertificationFailure,
  NonAdjacentLevels,
  ParseError,
  ValidationError,
  DimensionMismatch,
};

const char* kind_name(ErrorKind k);

/// Every failure raised by the library. `where` names the module that
/// detected the problem (rootspace, gradedla, ...).
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string where, const std::string& msg)
      : std::runtime_error(where + ": " + kind_name(kind) + ": " + msg), kind_(kind), where_(std::move(where)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& where() const { return where_; }

private:
  ErrorKind kind_;
  std::string where_;
};

}  // namespace bgg
