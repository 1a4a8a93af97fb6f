#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "polytriv/function_table.hpp"
#include "polytriv/phi.hpp"
#include "polytriv/predicate.hpp"

namespace polytriv {

/// One function per coordinate, all of one arity.
struct PolymorphismTuple {
  std::vector<FunctionTable> components;

  std::size_t arity() const { return components.at(0).arity(); }

  bool operator==(const PolymorphismTuple&) const = default;
};

/// Throws input_error unless fs has one component per coordinate of sig,
/// with matching alphabets and a common arity.
void require_matches(const Signature& sig, const PolymorphismTuple& fs);

/// An m x n argument matrix, stored as its n columns (each a point of the
/// cube). Row i collects coordinate i of every column.
class InputMatrix {
 public:
  explicit InputMatrix(std::vector<Tuple> columns);

  const std::vector<Tuple>& columns() const noexcept { return columns_; }
  std::size_t width() const noexcept { return columns_.size(); }
  Tuple row(std::size_t coordinate) const;

  bool operator==(const InputMatrix&) const = default;

 private:
  std::vector<Tuple> columns_;
};

/// Row-wise application: coordinate i of the result is fs_i on row i.
Tuple apply(const PolymorphismTuple& fs, const InputMatrix& matrix);

/// True when every matrix with all columns in P maps into P under fs.
bool is_polymorphism(const Predicate& p, const PolymorphismTuple& fs);

/// The first (in lexicographic column order) all-columns-in-P matrix whose
/// image leaves P, or nullopt when fs is a polymorphism.
std::optional<InputMatrix> find_violation(const Predicate& p,
                                          const PolymorphismTuple& fs);

struct EnumerationOptions {
  /// Work budget in table-entry assignments; exhausting it throws
  /// budget_error.
  std::uint64_t budget = 1'000'000'000;
  /// Worker threads. With more than one, results are buffered per work item
  /// and visited afterwards, still in canonical order; successful runs are
  /// byte-identical to sequential ones.
  unsigned workers = 1;
  /// Optional pre-pinned table entries: given (coordinate, table index),
  /// return a forced value or nullopt. Pinned entries participate in
  /// enumeration as single-value domains.
  std::function<std::optional<Value>(std::size_t, std::size_t)> pin;
};

/// Visitor for enumeration; return false to stop early.
using PolymorphismVisitor = std::function<bool(const PolymorphismTuple&)>;

/// Enumerates every polymorphism tuple of P at the given arity, in canonical
/// order: tuples ordered lexicographically by the concatenation of their
/// tables (coordinate-major, each table ascending). The search assigns table
/// entries coordinate by coordinate and discards a branch as soon as some
/// fully-determined matrix image leaves P.
void enumerate_polymorphisms(const Predicate& p, std::size_t arity,
                             const EnumerationOptions& options,
                             const PolymorphismVisitor& visit);

std::vector<PolymorphismTuple> collect_polymorphisms(
    const Predicate& p, std::size_t arity, const EnumerationOptions& options = {});

std::uint64_t count_polymorphisms(const Predicate& p, std::size_t arity,
                                  const EnumerationOptions& options = {});

/// fs agrees with phi(x_argument) on every input, componentwise.
struct DictatorWitness {
  std::size_t argument;
  std::vector<FunctionTable> phi;

  bool operator==(const DictatorWitness&) const = default;
};

/// Every way a tuple is Dictatorial (which arguments, with which patterns)
/// and every inclusion-minimal certificate it conforms to.
struct TypeVerdict {
  std::vector<DictatorWitness> dictatorial;
  std::vector<Certificate> certificates;

  bool neither() const noexcept {
    return dictatorial.empty() && certificates.empty();
  }
};

/// Classifies tuples against one predicate, with the predicate's minimal
/// certificates precomputed once.
class PolymorphismClassifier {
 public:
  explicit PolymorphismClassifier(const Predicate& p);

  /// Requires phi's signature to equal the predicate's. A tuple is
  /// Dictatorial via argument j when every component factors through j and
  /// the resulting pattern tuple belongs to phi; it is certificate-type when
  /// each component is constant on the pinned coordinates of some minimal
  /// certificate (equivalently, the constant components cover the
  /// certificate with matching values).
  TypeVerdict classify(const PhiFamily& phi, const PolymorphismTuple& fs) const;

  const Predicate& predicate() const noexcept { return p_; }
  const std::vector<Certificate>& minimal_certs() const noexcept { return minimal_; }

 private:
  Predicate p_;
  std::vector<Certificate> minimal_;
};

/// One-shot convenience wrapper around PolymorphismClassifier.
TypeVerdict classify_polymorphism(const Predicate& p, const PhiFamily& phi,
                                  const PolymorphismTuple& fs);

}  // namespace polytriv
