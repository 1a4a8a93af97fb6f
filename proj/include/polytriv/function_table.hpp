#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "polytriv/errors.hpp"
#include "polytriv/predicate.hpp"

namespace polytriv {

/// A total function {0..k-1}^n -> {0..k-1} stored as a flat value table.
/// Argument 0 is the least significant digit of the table index, so the
/// canonical enumeration order of tables (ascending as vectors) lists
/// entries with argument 0 varying fastest.
class FunctionTable {
 public:
  FunctionTable(std::size_t alphabet_size, std::size_t arity,
                std::vector<Value> table);

  static FunctionTable identity(std::size_t alphabet_size);
  static FunctionTable negation();  // {0,1} -> {0,1}, x -> 1-x
  static FunctionTable constant(std::size_t alphabet_size, std::size_t arity,
                                Value value);
  static FunctionTable projection(std::size_t alphabet_size, std::size_t arity,
                                  std::size_t argument);

  std::size_t alphabet_size() const noexcept { return k_; }
  std::size_t arity() const noexcept { return n_; }
  const std::vector<Value>& table() const noexcept { return table_; }

  /// Table index of an argument tuple; argument 0 is least significant.
  std::size_t index_of(const Tuple& args) const;
  Value eval(const Tuple& args) const { return table_[index_of(args)]; }

  /// The (n-1)-ary function obtained by pinning the last argument.
  FunctionTable fix_last_argument(Value sigma) const;

  std::optional<Value> constant_value() const;
  /// Bijectivity; meaningful (and only allowed) for unary tables.
  bool is_permutation() const;

  bool operator==(const FunctionTable& other) const noexcept {
    return k_ == other.k_ && n_ == other.n_ && table_ == other.table_;
  }
  /// Orders by alphabet, then arity, then table contents (the canonical
  /// enumeration order for fixed alphabet and arity).
  std::strong_ordering operator<=>(const FunctionTable& other) const noexcept;

 private:
  std::size_t k_;
  std::size_t n_;
  std::vector<Value> table_;
};

/// f(x) == phi(x_argument) for all x.
struct DictatorProjection {
  std::size_t argument;
  FunctionTable phi;

  bool operator==(const DictatorProjection&) const = default;
};

enum class UnaryKind { constant, permutation, other };

/// Shape summary of one table: constancy, unary bijectivity, and every way
/// it factors through a single argument.
struct UnaryAnalysis {
  UnaryKind kind = UnaryKind::other;
  std::optional<Value> constant;
  std::vector<DictatorProjection> dictators;
};

/// If f(x) = phi(x_argument) for a (necessarily unique) unary phi, returns
/// phi; otherwise nullopt.
std::optional<FunctionTable> factor_through_argument(const FunctionTable& f,
                                                     std::size_t argument);

UnaryAnalysis analyze(const FunctionTable& f);

/// phi composed with itself r times (unary bijections only). r = 0 gives the
/// identity.
FunctionTable permutation_power(const FunctionTable& phi, std::uint64_t r);

/// The number of applications after which every unary bijection on an
/// alphabet of size k returns to the identity: lcm(1..k) divides k!, and k!
/// is what this returns. Throws capability_error on overflow.
std::uint64_t factorial(std::size_t k);

/// g(x) = f(g_inner(x)) for unary tables on one alphabet.
FunctionTable compose_unary(const FunctionTable& f, const FunctionTable& inner);

/// For a binary-alphabet table: x -> 1 - f(1-x_1, ..., 1-x_n).
FunctionTable conjugate_by_negation(const FunctionTable& f);

/// For a binary-alphabet table: the (J, b) with f(x) = b xor (xor of x_j
/// over j in J), if f is of that form.
std::optional<std::pair<std::vector<std::size_t>, Value>> detect_affine(
    const FunctionTable& f);

/// For a binary-alphabet table: the (possibly empty) J with f(x) = AND of
/// x_j over J, if f is of that form; empty J means constant 1.
std::optional<std::vector<std::size_t>> detect_and_of_subset(const FunctionTable& f);

/// For a binary-alphabet table: the (possibly empty) J with f(x) = OR of x_j
/// over J; empty J means constant 0.
std::optional<std::vector<std::size_t>> detect_or_of_subset(const FunctionTable& f);

/// For a 2-ary table: every row x -> f(a, x) and every column x -> f(x, a)
/// is a permutation.
bool is_latin_square(const FunctionTable& f);

/// All 2-ary tables on alphabet k that are latin squares, in canonical
/// (ascending table) order. Guarded by `max_alphabet` (capability_error).
std::vector<FunctionTable> enumerate_latin_squares(std::size_t alphabet_size,
                                                   std::size_t max_alphabet = 4);

}  // namespace polytriv
