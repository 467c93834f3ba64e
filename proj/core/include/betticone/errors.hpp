#pragma once

#include <stdexcept>
#include <string>

namespace betticone {

// Base class for errors that describe data outside the mathematical domain
// of an operation (as opposed to malformed input syntax or internal bugs).
// The command line tool maps these to exit code 2.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A subtraction drove a table entry below zero.
struct NegativeEntryError : DomainError {
  using DomainError::DomainError;
};

// Nonzero columns of a table do not form a contiguous range starting at 0.
struct ColumnGapError : DomainError {
  using DomainError::DomainError;
};

// Column minima (or a degree sequence) fail to increase strictly.
struct NotIncreasingError : DomainError {
  using DomainError::DomainError;
};

// A degree sequence is longer than the ambient variable count allows.
struct TooLongError : DomainError {
  using DomainError::DomainError;
};

// A chain of degree sequences does not have the shape an operation needs.
struct BadChainError : DomainError {
  using DomainError::DomainError;
};

// A computation was refused because configured size bounds were exceeded.
struct TooLargeError : DomainError {
  using DomainError::DomainError;
};

// A table that must be generated in degree 0 has no entry at (0, 0).
struct NotDegreeZeroError : DomainError {
  using DomainError::DomainError;
};

// A table violates structural invariants (entry sign, column range, ...).
struct InvalidTableError : DomainError {
  using DomainError::DomainError;
};

}  // namespace betticone
