#pragma once

#include <stdexcept>
#include <string>

namespace toricbundle {

/// Operand shapes or lattice dimensions disagree.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A matrix that must be invertible (or unimodular) is not.
class SingularMatrix : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Structurally malformed input: bad indices, bad parameters, unparsable files.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed input that fails a mathematical validity rule.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace toricbundle
