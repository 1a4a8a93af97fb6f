#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "polytriv/errors.hpp"

namespace polytriv {

/// A single coordinate value. Alphabets are {0, ..., k-1} with k <= 255.
using Value = std::uint8_t;

/// A point of the product cube: one value per coordinate.
using Tuple = std::vector<Value>;

/// Alphabet sizes (k_1, ..., k_m) of the m coordinates of a product cube.
class Signature {
 public:
  explicit Signature(std::vector<std::size_t> sizes);

  std::size_t arity() const noexcept { return sizes_.size(); }
  std::size_t size(std::size_t coordinate) const { return sizes_.at(coordinate); }
  const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }

  /// True when every coordinate has alphabet {0,1}.
  bool all_binary() const noexcept;

  /// Number of points of the product cube, prod_i k_i.
  std::size_t cube_size() const noexcept { return cube_size_; }

  /// Lexicographic rank of a tuple: coordinate 0 is most significant.
  std::size_t index_of(const Tuple& t) const;
  /// Inverse of index_of.
  Tuple tuple_at(std::size_t index) const;

  bool operator==(const Signature& other) const noexcept {
    return sizes_ == other.sizes_;
  }

 private:
  std::vector<std::size_t> sizes_;
  std::size_t cube_size_ = 1;
};

/// A partial assignment rho: values pinned on a subset of coordinates,
/// stored sorted by coordinate.
class Certificate {
 public:
  Certificate() = default;
  explicit Certificate(std::vector<std::pair<std::size_t, Value>> entries);

  const std::vector<std::pair<std::size_t, Value>>& entries() const noexcept {
    return entries_;
  }
  std::size_t domain_size() const noexcept { return entries_.size(); }
  bool defines(std::size_t coordinate) const noexcept;
  std::optional<Value> value_at(std::size_t coordinate) const noexcept;

  /// The restriction of this assignment with one coordinate dropped.
  Certificate without(std::size_t coordinate) const;

  bool operator==(const Certificate& other) const noexcept {
    return entries_ == other.entries_;
  }
  bool operator<(const Certificate& other) const noexcept {
    return entries_ < other.entries_;
  }

 private:
  std::vector<std::pair<std::size_t, Value>> entries_;
};

/// Value `missing` of coordinate `coordinate` appears in no member tuple.
struct ProjectionGap {
  std::size_t coordinate;
  Value missing;

  bool operator==(const ProjectionGap&) const = default;
};

/// Outcome of the non-degeneracy validation of a predicate.
struct ValidationReport {
  bool ok = true;
  /// Coordinate values that never occur (surjectivity failures).
  std::vector<ProjectionGap> projection_gaps;
  /// Coordinates whose value never influences membership.
  std::vector<std::size_t> insensitive_coordinates;
};

/// A subset P of a finite product cube, the central object everything else
/// is measured against. Immutable after construction; tuples are kept in
/// lexicographic order and membership is O(1).
class Predicate {
 public:
  /// Validates every tuple against `sig` (throws input_error on length or
  /// range violations), deduplicates, and sorts.
  static Predicate from_tuples(Signature sig, std::vector<Tuple> tuples);

  const Signature& signature() const noexcept { return sig_; }
  std::size_t size() const noexcept { return tuples_.size(); }
  bool empty() const noexcept { return tuples_.empty(); }
  const std::vector<Tuple>& tuples() const noexcept { return tuples_; }

  bool contains(const Tuple& t) const;
  /// Membership by lexicographic rank (see Signature::index_of).
  bool contains_index(std::size_t index) const { return member_[index]; }

  bool operator==(const Predicate& other) const noexcept {
    return sig_ == other.sig_ && tuples_ == other.tuples_;
  }

 private:
  Predicate(Signature sig, std::vector<Tuple> tuples);

  Signature sig_;
  std::vector<Tuple> tuples_;
  std::vector<bool> member_;
};

/// Checks both non-degeneracy clauses: every value of every coordinate
/// occurs in some member, and every coordinate influences membership
/// (for some y in P and some value sigma, overwriting that coordinate
/// with sigma leaves P).
ValidationReport validate_non_degenerate(const Predicate& p);

/// Throws degenerate_error (with the first offending clause in the message)
/// unless validate_non_degenerate passes.
void require_non_degenerate(const Predicate& p);

/// y with coordinate i overwritten by sigma.
Tuple set_coordinate(Tuple y, std::size_t coordinate, Value sigma);

/// True when overwriting coordinate i with sigma maps P into P.
bool closed_under_setting(const Predicate& p, std::size_t coordinate, Value sigma);

/// True when every total extension of rho lies in P. The empty assignment
/// qualifies exactly when P is the whole cube. Throws input_error if rho
/// mentions an invalid coordinate or value.
bool is_certificate(const Predicate& p, const Certificate& rho);

struct CertificateRecord {
  Certificate certificate;
  /// No proper restriction obtained by dropping one pinned coordinate is
  /// itself a certificate.
  bool minimal = false;
};

/// All certificates with at most `max_domain_size` pinned coordinates,
/// ordered by domain (lexicographic as a sorted coordinate list) and then by
/// pinned values, each flagged for minimality.
std::vector<CertificateRecord> enumerate_certificates(const Predicate& p,
                                                      std::size_t max_domain_size);

/// Just the inclusion-minimal certificates, in the enumeration order above.
std::vector<Certificate> minimal_certificates(const Predicate& p);

/// The symmetric predicate on {0,1}^m whose members are the tuples with
/// Hamming weight in `weights`. Throws input_error on m == 0, m > 26, or a
/// weight above m.
Predicate symmetric_predicate(std::size_t m, const std::vector<std::size_t>& weights);

/// Not-all-equal on {0,1}^3 (weights {1, 2}).
Predicate nae_predicate();

/// True when P is fixed by flipping every bit of every tuple.
/// Requires an all-binary signature (throws input_error otherwise).
bool complement_closed(const Predicate& p);

/// The image of P under flipping every bit (all-binary signatures only).
Predicate bitflip_predicate(const Predicate& p);

}  // namespace polytriv
