#pragma once

#include <stdexcept>
#include <string>

namespace flagsplit {

// Malformed user input: unknown generator letters, bad group-ring syntax,
// invalid primes, and the like. CLI exit code 2.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration was about to exceed its configured budget. CLI exit code 3.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A requested verification failed (idempotent conditions, direct-sum
// accounting, ...). CLI exit code 1.
struct VerificationError : std::runtime_error {
  explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical invariant the engine relies on did not hold (non-exact
// division, dimension mismatch, non-integral change of basis, ...). These
// indicate a bug or an unsupported input and are never silently ignored.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InternalError(what);
}

}  // namespace flagsplit
