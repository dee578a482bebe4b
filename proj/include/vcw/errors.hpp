#pragma once

#include <stdexcept>
#include <string>

namespace vcw {

// Base for every error raised by the library. The CLI maps subclasses onto
// exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidGraph : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

// A connected component consisting of a single edge; no vertex-coloring
// edge-weighting exists for such a graph.
class K2Component : public Error {
 public:
  K2Component(int u, int v)
      : Error("K2 component {" + std::to_string(u) + "," + std::to_string(v) +
              "}"),
        u_(u),
        v_(v) {}

  int u() const noexcept { return u_; }
  int v() const noexcept { return v_; }

 private:
  int u_;
  int v_;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class DomainMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

// A stage postcondition failed. These are bugs, never input problems.
class InvariantViolation : public Error {
 public:
  InvariantViolation(std::string stage, const std::string& message)
      : Error(stage + ": " + message), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

}  // namespace vcw
