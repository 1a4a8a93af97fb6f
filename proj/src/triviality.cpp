#include "polytriv/triviality.hpp"

#include <algorithm>

namespace polytriv {

TrivialityReport check_trivial_for_n(const Predicate& p, const PhiFamily& phi,
                                     std::size_t arity,
                                     const EnumerationOptions& options) {
  require_non_degenerate(p);
  if (!(phi.signature() == p.signature()))
    throw input_error("pattern family signature does not match predicate");

  PolymorphismClassifier classifier(p);
  TrivialityReport report;
  report.trivial = true;
  report.arity = arity;
  VerdictCensus census;

  enumerate_polymorphisms(p, arity, options, [&](const PolymorphismTuple& fs) {
    TypeVerdict verdict = classifier.classify(phi, fs);
    if (verdict.neither()) {
      report.trivial = false;
      report.witness = fs;
      return false;
    }
    ++census.total;
    const bool dict = !verdict.dictatorial.empty();
    const bool cert = !verdict.certificates.empty();
    if (dict && cert)
      ++census.both;
    else if (dict)
      ++census.dictatorial_only;
    else
      ++census.certificate_only;
    return true;
  });

  if (report.trivial) report.census = census;
  return report;
}

TrivialityReport decide_trivial(const Predicate& p, const PhiFamily& phi,
                                const EnumerationOptions& options) {
  // Triviality at arity 2 settles every arity.
  return check_trivial_for_n(p, phi, 2, options);
}

namespace {

bool projects_onto_one_argument(const PolymorphismTuple& fs) {
  const std::size_t n = fs.arity();
  for (std::size_t j = 0; j < n; ++j) {
    bool all = true;
    for (const FunctionTable& f : fs.components) {
      auto phi = factor_through_argument(f, j);
      if (!phi || !phi->is_permutation()) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

}  // namespace

std::optional<PolymorphismTuple> find_and_or_polymorphism(
    const Predicate& p, const DetectorLimits& limits) {
  require_non_degenerate(p);
  const Signature& sig = p.signature();
  const std::size_t m = sig.arity();

  std::vector<std::size_t> binary;
  for (std::size_t i = 0; i < m; ++i)
    if (sig.size(i) == 2) binary.push_back(i);
  if (binary.size() > limits.max_binary_coordinates)
    throw capability_error("too many binary coordinates for the and/or scan");

  const FunctionTable conj(2, 2, {0, 0, 0, 1});
  const FunctionTable disj(2, 2, {0, 1, 1, 1});

  for (std::size_t mask = 0; mask < (std::size_t{1} << binary.size()); ++mask) {
    PolymorphismTuple fs;
    fs.components.reserve(m);
    std::size_t bit = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (sig.size(i) == 2) {
        fs.components.push_back((mask >> bit) & 1 ? disj : conj);
        ++bit;
      } else {
        fs.components.push_back(FunctionTable::projection(sig.size(i), 2, 0));
      }
    }
    if (projects_onto_one_argument(fs)) continue;
    if (is_polymorphism(p, fs)) return fs;
  }
  return std::nullopt;
}

bool latin_sections_conform(const Predicate& p, const PhiFamily& phi,
                            const PolymorphismTuple& fs) {
  require_matches(p.signature(), fs);
  if (fs.arity() != 2) throw input_error("section conformance requires arity 2");
  const std::size_t m = p.signature().arity();
  for (const Tuple& y : p.tuples()) {
    std::vector<FunctionTable> rows, cols;
    rows.reserve(m);
    cols.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t k = fs.components[i].alphabet_size();
      const auto& table = fs.components[i].table();
      std::vector<Value> row(k), col(k);
      for (std::size_t t = 0; t < k; ++t) {
        row[t] = table[y[i] + k * t];
        col[t] = table[t + k * y[i]];
      }
      rows.emplace_back(k, 1, std::move(row));
      cols.emplace_back(k, 1, std::move(col));
    }
    if (!phi.contains(rows) || !phi.contains(cols)) return false;
  }
  return true;
}

std::optional<PolymorphismTuple> find_latin_square_polymorphism(
    const Predicate& p, const PhiFamily* phi, const DetectorLimits& limits) {
  require_non_degenerate(p);
  const Signature& sig = p.signature();
  if (phi && !(phi->signature() == sig))
    throw input_error("pattern family signature does not match predicate");
  const std::size_t m = sig.arity();

  std::vector<std::vector<FunctionTable>> squares(m);
  for (std::size_t i = 0; i < m; ++i)
    squares[i] = enumerate_latin_squares(sig.size(i), limits.latin_alphabet_max);

  std::vector<std::size_t> pick(m, 0);
  while (true) {
    PolymorphismTuple fs;
    fs.components.reserve(m);
    for (std::size_t i = 0; i < m; ++i) fs.components.push_back(squares[i][pick[i]]);
    if ((!phi || latin_sections_conform(p, *phi, fs)) && is_polymorphism(p, fs))
      return fs;
    std::size_t pos = m;
    while (pos > 0) {
      if (++pick[pos - 1] < squares[pos - 1].size()) break;
      pick[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) return std::nullopt;
  }
}

ReductionReport reduction_report(const Predicate& p, const PhiFamily& phi,
                                 const EnumerationOptions& options,
                                 const DetectorLimits& limits) {
  if (!phi.permutations_only())
    throw input_error("reduction requires a pattern family of permutations");
  TrivialityReport at1 = check_trivial_for_n(p, phi, 1, options);
  ReductionReport report;
  report.trivial_at_1 = at1.trivial;
  report.witness_at_1 = at1.witness;

  if (!at1.trivial && p.signature().all_binary()) {
    const PolymorphismTuple& f = *at1.witness;
    PolymorphismTuple g;
    g.components.reserve(f.components.size());
    for (const FunctionTable& fi : f.components)
      g.components.push_back(compose_unary(fi, fi));
    // Self-composition of a unary polymorphism tuple is again one, and each
    // component lands in {const0, const1, identity}.
    PolymorphismClassifier classifier(p);
    if (classifier.classify(phi, g).neither()) {
      report.normalized_witness = std::move(g);
      report.shape = OneAryShape::const_or_identity;
    } else {
      const FunctionTable id = FunctionTable::identity(2);
      const FunctionTable neg = FunctionTable::negation();
      const bool id_neg_only =
          std::all_of(f.components.begin(), f.components.end(),
                      [&](const FunctionTable& fi) { return fi == id || fi == neg; });
      if (id_neg_only) {
        report.normalized_witness = f;
        report.shape = OneAryShape::identity_or_negation;
      }
    }
  }

  const Signature& sig = p.signature();
  for (std::size_t i = 0; i < sig.arity(); ++i)
    for (std::size_t v = 0; v < sig.size(i); ++v)
      if (closed_under_setting(p, i, static_cast<Value>(v)))
        report.closed_under.push_back({i, static_cast<Value>(v)});
  report.and_or = find_and_or_polymorphism(p, limits);
  report.latin_square = find_latin_square_polymorphism(p, &phi, limits);
  return report;
}

}  // namespace polytriv
