#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace liarwb {

// Base class for everything the workbench can throw.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Lexical or grammatical failure while reading a formula, scenario file or
// proof script. Carries the 1-based source position and the token classes
// that would have been accepted.
struct ParseError : Error {
  ParseError(int line, int column, const std::string& found,
             std::vector<std::string> expected_tokens)
      : Error(render(line, column, found, expected_tokens)),
        line(line),
        column(column),
        found(found),
        expected(std::move(expected_tokens)) {}

  int line;
  int column;
  std::string found;
  std::vector<std::string> expected;

 private:
  static std::string render(int line, int column, const std::string& found,
                            const std::vector<std::string>& expected) {
    std::string msg = "parse error at " + std::to_string(line) + ":" +
                      std::to_string(column) + ": found " + found;
    if (!expected.empty()) {
      msg += ", expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i > 0) msg += (i + 1 == expected.size()) ? " or " : ", ";
        msg += expected[i];
      }
    }
    return msg;
  }
};

// A structurally well-formed input that violates a system invariant
// (undefined sentence name, namespace clash, bad option value, ...).
struct ValidationError : Error {
  using Error::Error;
};

// An operation met a connective it does not interpret, or a name it has no
// value for.
struct EvalError : Error {
  using Error::Error;
};

// Two interpretations with different domains were compared.
struct DomainMismatchError : Error {
  using Error::Error;
};

// Exhaustive fixed-point enumeration was asked for more names than the cap
// allows. Signals infeasibility of the oracle, not a wrong answer.
struct CapExceededError : Error {
  using Error::Error;
};

// The proof-search node budget ran out before a verdict was reached.
struct BoundExceededError : Error {
  using Error::Error;
};

}  // namespace liarwb
