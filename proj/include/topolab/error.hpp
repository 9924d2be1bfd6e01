#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace topolab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structure failed one of its defining axioms at construction time.
class AxiomError : public Error {
 public:
  AxiomError(std::string axiom, const std::string& detail)
      : Error(axiom + ": " + detail), axiom_(std::move(axiom)) {}
  const std::string& axiom() const noexcept { return axiom_; }

 private:
  std::string axiom_;
};

/// A configured resource bound (carrier size, open-lattice size, map count) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A precondition or a mathematical postcondition did not hold.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// The requested symbolic variant or family combination has no closed form here.
class UnsupportedVariant : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& detail)
      : Error("line " + std::to_string(line) + ": " + detail), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace topolab
