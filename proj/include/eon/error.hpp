#pragma once

#include <stdexcept>
#include <string>

namespace eon {

enum class ErrorKind {
  ParameterDomain,   // invalid physical or model parameter
  NoRoute,           // disconnected source/destination pair
  Domain,            // argument outside an operation's domain
  Singularity,       // zero carrier distance with shared spans
  Inconsistency,     // internally inconsistent solution data
  CapacityExceeded,  // transponder bank exhausted at a node
  OrderingMissing,   // spectral order absent for a populated link
  Infeasible,        // certified infeasible program
  NonConvergence,    // iteration cap hit before tolerance
  RoundingFailure,   // no feasible discrete assignment found
  BudgetExceeded,    // oracle instance beyond enumeration budget
  NumericDomain,     // NaN/overflow from an evaluator
  Config,            // malformed configuration input
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace eon
