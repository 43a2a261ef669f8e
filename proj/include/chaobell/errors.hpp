#pragma once

#include <stdexcept>

namespace chaobell {

/// Malformed user input: bad arity, mismatched lengths, unparsable tokens.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A SimConfig that violates its invariants or does not fit the requested run.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace chaobell
