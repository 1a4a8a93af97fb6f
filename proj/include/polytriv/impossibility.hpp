#pragma once

#include <cstdint>
#include <optional>

#include "polytriv/polymorphism.hpp"
#include "polytriv/triviality.hpp"

namespace polytriv {

/// f(sigma, ..., sigma) = sigma for every alphabet value.
bool is_unanimous(const FunctionTable& f);
bool is_unanimous(const PolymorphismTuple& fs);

/// Every output is one of the inputs: f(x_1, ..., x_n) in {x_1, ..., x_n}.
bool is_supportive(const FunctionTable& f);

/// Every component equals the projection onto one shared argument.
bool is_common_projection(const PolymorphismTuple& fs);

/// How a possibility witness was obtained.
enum class WitnessSource {
  none,
  /// Found directly by the diagonal-pinned enumeration.
  search,
  /// Built from a coordinate the predicate is closed under overwriting.
  closure,
  /// A conjunction/disjunction polymorphism found by the detector.
  and_or,
  /// A latin-square polymorphism raised to a unanimity-restoring power.
  latin_power,
};

struct ImpossibilityOptions {
  EnumerationOptions enumeration;
  DetectorLimits detectors;
  /// When the pinned scan is clean, also try the three witness
  /// constructions (which can produce witnesses at other arities).
  bool run_detectors = true;
  /// Use the least common multiple of the row-permutation orders as the
  /// power-iteration exponent instead of the product of alphabet
  /// factorials.
  bool tight_exponent = false;
  /// Largest witness arity the power construction may emit.
  std::size_t max_witness_arity = 17;
  /// A witness is re-verified exhaustively only while the number of input
  /// matrices |P|^arity stays within this bound.
  std::uint64_t max_verify_matrices = 1'000'000;
};

struct UnanimityVerdict {
  /// No unanimous polymorphism other than a common projection was found at
  /// the checked arity, nor produced by any construction.
  bool is_impossibility_domain = false;
  std::size_t arity_checked = 0;
  /// Present exactly when the domain is not impossible: a unanimous
  /// polymorphism that is not a common projection (possibly of a different
  /// arity than the one checked).
  std::optional<PolymorphismTuple> witness;
  WitnessSource source = WitnessSource::none;
  /// True when the witness passed an exhaustive all-matrices re-check. A
  /// false value for a present witness means the matrix space was too large
  /// and the witness is certified structurally instead (verified arity-2
  /// base, composition closure, exhaustive diagonal check).
  bool witness_verified = false;
};

/// Decides whether every unanimous polymorphism of P at the given arity is a
/// common projection, enumerating with all diagonal table entries pinned to
/// their unanimity values. When the scan is clean the three witness
/// constructions are tried in order (closure, conjunction/disjunction,
/// latin-square power); any witness they produce also refutes impossibility.
/// Requires a non-degenerate P.
UnanimityVerdict check_impossibility_unanimity(const Predicate& p,
                                               std::size_t arity,
                                               const ImpossibilityOptions& options = {});

/// The arity-2 tuple that overwrites coordinate i0 with sigma0 whenever the
/// second argument allows it: component i0 maps (x1, x2) to sigma0 when
/// x2 = sigma0 and to x1 otherwise; every other component is the projection
/// onto the first argument. Requires closed_under_setting(p, i0, sigma0)
/// (throws input_error otherwise). The result is a unanimous polymorphism
/// depending on both arguments at i0.
PolymorphismTuple closure_witness(const Predicate& p, std::size_t i0, Value sigma0);

/// The (r+1)-ary right fold of each arity-2 component with itself:
/// iterate(f, 1) = f and iterate(f, r)(x_1, ..., x_{r+1}) =
/// f(x_1, iterate(f, r-1)(x_2, ..., x_{r+1})). Throws input_error unless
/// every component has arity 2 and r >= 1.
PolymorphismTuple iterate_polymorphism(const PolymorphismTuple& fs, std::uint64_t r);

/// The product of the factorials of the coordinate alphabet sizes - the
/// exponent that forces every row permutation of a latin-square tuple back
/// to the identity.
std::uint64_t default_power_exponent(const Signature& sig);

/// The least common multiple of the orders of all row permutations
/// x -> f_i(sigma, x). Requires latin-square components.
std::uint64_t tight_power_exponent(const PolymorphismTuple& fs);

/// Raises a latin-square polymorphism of P to the power that restores
/// unanimity: iterate_polymorphism(fs, r) with r the chosen exponent.
/// Requires every component to be a latin square and fs to be a
/// polymorphism of P (throws input_error otherwise); throws
/// capability_error when r+1 exceeds options.max_witness_arity. The result
/// is checked to satisfy the diagonal identity at every alphabet value.
PolymorphismTuple latin_power_witness(const Predicate& p,
                                      const PolymorphismTuple& fs,
                                      const ImpossibilityOptions& options = {});

}  // namespace polytriv
