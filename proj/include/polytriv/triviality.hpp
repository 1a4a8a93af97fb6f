#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polytriv/polymorphism.hpp"

namespace polytriv {

/// How the polymorphisms of a trivial instance split by verdict.
struct VerdictCensus {
  std::uint64_t total = 0;
  std::uint64_t dictatorial_only = 0;
  std::uint64_t certificate_only = 0;
  std::uint64_t both = 0;

  bool operator==(const VerdictCensus&) const = default;
};

struct TrivialityReport {
  bool trivial = false;
  std::size_t arity = 0;
  /// First (canonical order) polymorphism classifying Neither, when any.
  std::optional<PolymorphismTuple> witness;
  /// Verdict breakdown over all polymorphisms at this arity, when trivial.
  std::optional<VerdictCensus> census;
};

/// Exhaustively classifies every polymorphism of P at the given arity
/// against phi. Requires a non-degenerate P (throws degenerate_error).
TrivialityReport check_trivial_for_n(const Predicate& p, const PhiFamily& phi,
                                     std::size_t arity,
                                     const EnumerationOptions& options = {});

/// Decides whether every polymorphism of every arity classifies Dictatorial
/// or certificate-type, which reduces to the arity-2 check.
TrivialityReport decide_trivial(const Predicate& p, const PhiFamily& phi,
                                const EnumerationOptions& options = {});

struct DetectorLimits {
  /// Cap on binary coordinates scanned by the AND/OR detector (the scan is
  /// exponential in this count).
  std::size_t max_binary_coordinates = 20;
  /// Largest alphabet for which latin squares are enumerated.
  std::size_t latin_alphabet_max = 4;
};

/// Searches for a 2-ary polymorphism that is a conjunction or disjunction on
/// every binary coordinate (projection to the first argument elsewhere) and
/// is not a projection tuple onto one argument. Combinations are scanned
/// with conjunction before disjunction per coordinate, so the first hit is
/// canonical. Requires a non-degenerate P.
std::optional<PolymorphismTuple> find_and_or_polymorphism(
    const Predicate& p, const DetectorLimits& limits = {});

/// True when for every y in P the tuple of row sections x -> f_i(y_i, x)
/// and the tuple of column sections x -> f_i(x, y_i) both belong to phi.
bool latin_sections_conform(const Predicate& p, const PhiFamily& phi,
                            const PolymorphismTuple& fs);

/// Searches for a polymorphism whose every component is a latin square,
/// optionally requiring latin_sections_conform with phi (pass nullptr to
/// accept any latin-square polymorphism). Candidates are scanned in
/// coordinate-major canonical order. Requires a non-degenerate P.
std::optional<PolymorphismTuple> find_latin_square_polymorphism(
    const Predicate& p, const PhiFamily* phi, const DetectorLimits& limits = {});

enum class OneAryShape {
  none,
  /// Every component is constant 0, constant 1, or the identity.
  const_or_identity,
  /// Every component is the identity or the negation.
  identity_or_negation,
};

struct ClosureFlag {
  std::size_t coordinate;
  Value value;

  bool operator==(const ClosureFlag&) const = default;
};

/// Everything the arity-1-to-2 analysis produces: the arity-1 verdict, a
/// normalized unclassified witness for the non-trivial case (binary
/// signatures), and the three structural escape detectors that separate
/// arity-1 triviality from arity-2 triviality.
struct ReductionReport {
  bool trivial_at_1 = false;
  std::optional<PolymorphismTuple> witness_at_1;
  /// For binary non-trivial instances: a Neither witness whose components
  /// all have the shape named by `shape` (derived from witness_at_1 by
  /// self-composition when that stays Neither).
  std::optional<PolymorphismTuple> normalized_witness;
  OneAryShape shape = OneAryShape::none;
  /// All (coordinate, value) pairs P is closed under overwriting with.
  std::vector<ClosureFlag> closed_under;
  std::optional<PolymorphismTuple> and_or;
  std::optional<PolymorphismTuple> latin_square;  // conforming to phi
};

/// Runs the arity-1 check and all three detectors (detectors run regardless
/// of the arity-1 verdict; each detector witness, when present, classifies
/// Neither for every pattern family, so any hit certifies non-triviality at
/// arity 2). The normalized witness is produced for binary signatures when
/// the arity-1 check fails.
ReductionReport reduction_report(const Predicate& p, const PhiFamily& phi,
                                 const EnumerationOptions& options = {},
                                 const DetectorLimits& limits = {});

}  // namespace polytriv
