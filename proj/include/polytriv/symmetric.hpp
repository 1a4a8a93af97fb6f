#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polytriv/polymorphism.hpp"
#include "polytriv/triviality.hpp"

namespace polytriv {

/// A symmetric predicate on {0,1}^m, represented by the set of Hamming
/// weights its members may take.
class WeightSet {
 public:
  /// Validates m >= 1, m <= 26, and every weight <= m; deduplicates.
  WeightSet(std::size_t m, std::vector<std::size_t> weights);
  /// Bit w of mask set iff weight w allowed.
  static WeightSet from_mask(std::size_t m, std::uint32_t mask);

  std::size_t m() const noexcept { return m_; }
  const std::vector<std::size_t>& weights() const noexcept { return weights_; }
  bool contains(std::size_t w) const noexcept;
  std::uint32_t mask() const noexcept;

  /// w allowed iff m - w allowed, for every w.
  bool complement_closed() const noexcept;

  /// Weight-level equivalent of the predicate-level validation: some weight
  /// >= 1, some weight <= m-1, and some boundary w with exactly one of
  /// w, w+1 allowed.
  bool non_degenerate() const noexcept;

  Predicate predicate() const;

  bool operator==(const WeightSet&) const = default;

 private:
  std::size_t m_;
  std::vector<std::size_t> weights_;
};

/// The named weight-set shapes whose predicates stay non-trivial at every
/// arity. Parameter ranges: at_least w in [1, m-1]; at_least_plus_zero w in
/// [2, m]; at_most w in [1, m-1]; at_most_plus_one w in [0, m-2].
enum class FamilyTag {
  even_parity,
  odd_parity,
  at_least,
  at_least_plus_zero,
  at_most,
  at_most_plus_one,
};

struct SymmetricFamily {
  FamilyTag tag;
  std::size_t w = 0;  // unused for the parity tags

  bool operator==(const SymmetricFamily&) const = default;
};

struct SymmetricClassification {
  /// Every matching family shape (shapes overlap at boundary parameters).
  std::vector<SymmetricFamily> families;
  bool complement_closed = false;
  /// Trivial for the {id, negation}^m patterns iff no family matches.
  bool phi_neg_trivial = false;
  /// Trivial for the identity-only pattern iff additionally the weight set
  /// is not complement-closed.
  bool phi_id_trivial = false;
};

/// Closed-form triviality classification of a symmetric predicate. Throws
/// degenerate_error on degenerate weight sets.
SymmetricClassification classify_symmetric(const WeightSet& w);

/// The six mutually exclusive structural classes of the full polymorphism
/// description of symmetric predicates, applied as a priority list.
enum class StructureKind {
  /// m=2, weights {1}: second table is the bit-flip conjugate of the first.
  complement_pair,
  /// weights {0, m}: all tables equal.
  shared_function,
  /// parity weights (m >= 3): affine tables with one common support.
  parity_affine,
  /// at-most/at-least threshold: indicator families (w+1)-wise intersecting.
  threshold_intersecting,
  /// threshold plus the opposite corner: a shared AND/OR of a subset, or
  /// enough constant tables.
  threshold_plus_corner,
  /// everything else: a common (anti-)dictator or certificate conformance.
  dictator_or_certificate,
};

struct StructureDescriptor {
  StructureKind kind;
  /// Direction for the two threshold kinds.
  enum class Variant { none, at_most, at_least } variant = Variant::none;
  std::size_t w = 0;   // threshold kinds
  Value parity = 0;    // parity_affine
  bool complement_closed = false;  // dictator_or_certificate

  bool operator==(const StructureDescriptor&) const = default;
};

/// The unique applicable structure class, applying the guards in priority
/// order. Throws degenerate_error on degenerate weight sets.
StructureDescriptor polymorphism_family(const WeightSet& w);

/// The indicator families F_i = { S subseteq arguments : f_i(1_S) = 1 },
/// each as an ascending list of argument bitmasks. Binary alphabets only;
/// arity capped at 20.
std::vector<std::vector<std::uint32_t>> families_from_functions(
    const PolymorphismTuple& fs);

/// Every choice of k distinct families and one set from each has a common
/// element. Vacuously true when fewer than k families or when a chosen
/// family is empty.
bool check_kwise_intersecting(const std::vector<std::vector<std::uint32_t>>& families,
                              std::size_t k);

/// Membership test "fs is a polymorphism of the descriptor's predicate",
/// computed structurally from the descriptor instead of by matrix
/// enumeration. Minimal certificates are precomputed once per checker.
class StructureChecker {
 public:
  StructureChecker(const Predicate& p, StructureDescriptor descriptor);

  bool operator()(const PolymorphismTuple& fs) const;

  const StructureDescriptor& descriptor() const noexcept { return descriptor_; }

 private:
  std::size_t m_;
  StructureDescriptor descriptor_;
  std::vector<Certificate> minimal_;  // dictator_or_certificate only
};

bool check_structure(const Predicate& p, const StructureDescriptor& descriptor,
                     const PolymorphismTuple& fs);

struct AtlasRow {
  std::size_t m;
  std::uint32_t mask;
  std::vector<std::size_t> weights;
  SymmetricClassification classification;
  StructureDescriptor structure;
  /// Brute-force arity-2 verdicts from the enumeration engine.
  bool brute_neg_trivial = false;
  bool brute_id_trivial = false;
  /// Polymorphism counts (full enumeration); absent when counting was
  /// skipped for speed.
  std::optional<std::uint64_t> count_n1;
  std::optional<std::uint64_t> count_n2;
  /// Closed-form verdicts equal the brute-force ones.
  bool agree = false;
};

/// One row per non-degenerate weight set with m from 1 to max_m, ordered by
/// (m, mask). When include_counts is false the arity-2 enumeration stops as
/// soon as both brute verdicts are settled and the arity-1 count is skipped.
std::vector<AtlasRow> atlas_sweep(std::size_t max_m, bool include_counts,
                                  const EnumerationOptions& options = {});

}  // namespace polytriv
