#ifndef CRR_ERRORS_HPP
#define CRR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crr {

// Incompatible matrix dimensions. Distinct from a "false" verification result.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed input text. Carries the 1-based line number when known.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg),
        line_number(line) {}
  std::size_t line_number;
};

// A solver assignment that does not cover the variables we need.
struct DecodeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller violated a documented precondition.
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

// A guaranteed-to-succeed step failed; indicates a bug.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// Brute-force enumeration would exceed the caller's budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// External solver process could not be launched.
struct SpawnError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// External solver exited with an unexpected status and no parseable output.
struct SolverExitError : std::runtime_error {
  SolverExitError(const std::string& msg, int code)
      : std::runtime_error(msg + " (exit status " + std::to_string(code) + ")"),
        exit_code(code) {}
  int exit_code;
};

// External solver produced unparseable output.
// Carries the offending line when there is one.
struct SolverOutputError : std::runtime_error {
  explicit SolverOutputError(const std::string& msg, std::string offending = "")
      : std::runtime_error(offending.empty() ? msg : msg + " [" + offending + "]"),
        offending_line(std::move(offending)) {}
  std::string offending_line;
};

// A backend claimed sat but its decoded model does not verify.
struct ModelIntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace crr

#endif
