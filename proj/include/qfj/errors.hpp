#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qfj {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input outside an operation's domain (x = 0 for the q-derivative, q outside
/// (0,1), negative binomial arguments).
class DomainError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

class ValidationError : public Error {
public:
  using Error::Error;
};

/// Enumeration or allocation request above a configured limit.
class ResourceError : public Error {
public:
  using Error::Error;
};

class DivergenceError : public Error {
public:
  using Error::Error;
};

/// A truncated sum whose tail estimate exceeds the requested tolerance.
class TruncationError : public Error {
public:
  using Error::Error;
};

/// Non-finite integrand value at a Jackson node.
class EvaluationError : public Error {
public:
  EvaluationError(const std::string& what, std::size_t node)
      : Error(what + " (node " + std::to_string(node) + ")"), node_(node) {}
  std::size_t node() const noexcept { return node_; }

private:
  std::size_t node_;
};

/// Adding or subtracting scalars that carry different surd factors.
class SurdMismatchError : public Error {
public:
  using Error::Error;
};

}  // namespace qfj
