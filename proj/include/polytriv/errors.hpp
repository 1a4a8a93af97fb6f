#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace polytriv {

/// Malformed arguments, files, or objects whose shapes do not fit together
/// (wrong alphabet, wrong arity, out-of-range coordinate, ...).
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input predicate violates a non-degeneracy requirement of the
/// requested operation: some coordinate never influences membership, or some
/// value of some coordinate never occurs in the predicate.
class degenerate_error : public input_error {
 public:
  using input_error::input_error;
};

/// A structural limit was exceeded: the requested object is well defined but
/// larger than this implementation (or its configured caps) supports.
class capability_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive search ran out of its work budget before finishing.
/// Carries how much work was done and how many results were produced, so a
/// caller can report partial progress.
class budget_error : public std::runtime_error {
 public:
  budget_error(const std::string& what, std::uint64_t assignments,
               std::uint64_t yielded)
      : std::runtime_error(what), assignments_(assignments), yielded_(yielded) {}

  /// Table-entry assignments performed before the budget ran out.
  std::uint64_t assignments() const noexcept { return assignments_; }
  /// Complete results produced before the budget ran out.
  std::uint64_t yielded() const noexcept { return yielded_; }

 private:
  std::uint64_t assignments_;
  std::uint64_t yielded_;
};

}  // namespace polytriv
