#pragma once

#include <stdexcept>
#include <string>

namespace udg {

/// Caller-supplied data violates a precondition (bad file, bad index, ...).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// An internal invariant failed; indicates a solver bug, never bad input.
class ContractError : public std::logic_error {
 public:
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

/// Instance generation could not satisfy its margin rules.
class GenerationError : public std::runtime_error {
 public:
  explicit GenerationError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace udg

// Optional heavyweight invariant checks (side cliqueness and similar).
// Test targets define UDG_VALIDATE; release binaries leave them out.
#ifdef UDG_VALIDATE
#define UDG_CHECK(cond, msg)                  \
  do {                                        \
    if (!(cond)) throw ::udg::ContractError(msg); \
  } while (0)
#else
#define UDG_CHECK(cond, msg) \
  do {                       \
  } while (0)
#endif
