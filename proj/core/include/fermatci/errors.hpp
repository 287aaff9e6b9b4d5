#pragma once

#include <stdexcept>
#include <string>

namespace fermatci {

/// Caller handed us parameters outside an operation's documented domain.
/// The command-line tool maps this to exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A verification step did not hold (e.g. a certificate ingredient vanishes
/// where the construction needs it, or a witness search is exhausted).
/// Distinct from UsageError: the inputs were legal, the check failed.
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fermatci
