#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "polytriv/function_table.hpp"
#include "polytriv/predicate.hpp"

namespace polytriv {

/// A family of unary-tuple patterns (phi_1, ..., phi_m), one unary table per
/// coordinate, used as the allowed shapes on the dictated argument. The
/// standard families are closed-form (membership is computed, not stored);
/// arbitrary families can be supplied explicitly.
class PhiFamily {
 public:
  enum class Kind {
    identity,               // the single tuple (id, ..., id)
    uniform_id_negation,    // (id, ..., id) and (neg, ..., neg); binary only
    all_id_negation,        // every tuple over {id, neg}; binary only
    all_const_id_negation,  // every tuple over {const0, const1, id, neg}
    all_permutations,       // every tuple of bijections
    custom,                 // explicit member list
  };

  static PhiFamily identity(Signature sig);
  static PhiFamily uniform_id_negation(Signature sig);
  static PhiFamily all_id_negation(Signature sig);
  static PhiFamily all_const_id_negation(Signature sig);
  static PhiFamily all_permutations(Signature sig);
  /// Validates each member: m unary tables with the right alphabets.
  /// Deduplicates and sorts members. Throws input_error on an empty list.
  static PhiFamily custom(Signature sig, std::vector<std::vector<FunctionTable>> members);

  Kind kind() const noexcept { return kind_; }
  const Signature& signature() const noexcept { return sig_; }

  /// Membership of a tuple of unary tables. Throws input_error when the
  /// tuple does not fit the signature (wrong length, arity, or alphabet).
  bool contains(const std::vector<FunctionTable>& phis) const;

  /// Every member consists of bijections.
  bool permutations_only() const;

  /// Number of members. Throws capability_error if it exceeds 64 bits.
  std::uint64_t member_count() const;

  /// Visits members in a fixed order (componentwise canonical order for the
  /// closed-form kinds, sorted order for custom); stops early when the
  /// visitor returns false. Throws capability_error when the family is too
  /// large to walk (> 10^7 members).
  void for_each_member(
      const std::function<bool(const std::vector<FunctionTable>&)>& visit) const;

  /// Stable lowercase label for reports ("id", "neg", ...).
  std::string name() const;

  const std::vector<std::vector<FunctionTable>>& custom_members() const {
    return members_;
  }

 private:
  PhiFamily(Kind kind, Signature sig) : kind_(kind), sig_(std::move(sig)) {}

  Kind kind_;
  Signature sig_;
  std::vector<std::vector<FunctionTable>> members_;  // custom only
};

}  // namespace polytriv
