#include "polytriv/symmetric.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace polytriv {

namespace {

std::uint32_t bit(std::size_t w) { return std::uint32_t{1} << w; }

// Bits lo..hi inclusive.
std::uint32_t range_mask(std::size_t lo, std::size_t hi) {
  std::uint32_t mask = 0;
  for (std::size_t w = lo; w <= hi; ++w) mask |= bit(w);
  return mask;
}

std::uint32_t parity_mask(std::size_t m, std::size_t residue) {
  std::uint32_t mask = 0;
  for (std::size_t w = residue; w <= m; w += 2) mask |= bit(w);
  return mask;
}

void require_non_degenerate_weights(const WeightSet& w) {
  if (!w.non_degenerate())
    throw degenerate_error("degenerate weight set for m = " + std::to_string(w.m()));
}

}  // namespace

WeightSet::WeightSet(std::size_t m, std::vector<std::size_t> weights) : m_(m) {
  if (m == 0) throw input_error("weight set needs m >= 1");
  if (m > 26) throw capability_error("weight sets limited to m <= 26");
  std::set<std::size_t> unique;
  for (std::size_t w : weights) {
    if (w > m)
      throw input_error("weight " + std::to_string(w) + " exceeds m = " +
                        std::to_string(m));
    unique.insert(w);
  }
  weights_.assign(unique.begin(), unique.end());
}

WeightSet WeightSet::from_mask(std::size_t m, std::uint32_t mask) {
  std::vector<std::size_t> weights;
  for (std::size_t w = 0; w < 32; ++w)
    if (mask & bit(w)) weights.push_back(w);
  return WeightSet(m, std::move(weights));
}

bool WeightSet::contains(std::size_t w) const noexcept {
  return std::binary_search(weights_.begin(), weights_.end(), w);
}

std::uint32_t WeightSet::mask() const noexcept {
  std::uint32_t mask = 0;
  for (std::size_t w : weights_) mask |= bit(w);
  return mask;
}

bool WeightSet::complement_closed() const noexcept {
  for (std::size_t w = 0; w <= m_; ++w)
    if (contains(w) != contains(m_ - w)) return false;
  return true;
}

bool WeightSet::non_degenerate() const noexcept {
  if (weights_.empty()) return false;
  if (weights_.back() < 1 || weights_.front() > m_ - 1) return false;
  for (std::size_t w = 0; w < m_; ++w)
    if (contains(w) != contains(w + 1)) return true;
  return false;
}

Predicate WeightSet::predicate() const { return symmetric_predicate(m_, weights_); }

SymmetricClassification classify_symmetric(const WeightSet& w) {
  require_non_degenerate_weights(w);
  const std::size_t m = w.m();
  const std::uint32_t mask = w.mask();

  SymmetricClassification c;
  c.complement_closed = w.complement_closed();
  if (mask == parity_mask(m, 0)) c.families.push_back({FamilyTag::even_parity});
  if (mask == parity_mask(m, 1)) c.families.push_back({FamilyTag::odd_parity});
  for (std::size_t t = 1; t <= m - 1; ++t)
    if (mask == range_mask(t, m)) c.families.push_back({FamilyTag::at_least, t});
  for (std::size_t t = 2; t <= m; ++t)
    if (mask == (range_mask(t, m) | bit(0)))
      c.families.push_back({FamilyTag::at_least_plus_zero, t});
  for (std::size_t t = 1; t <= m - 1; ++t)
    if (mask == range_mask(0, t)) c.families.push_back({FamilyTag::at_most, t});
  for (std::size_t t = 0; t + 2 <= m; ++t)
    if (mask == (range_mask(0, t) | bit(m)))
      c.families.push_back({FamilyTag::at_most_plus_one, t});

  c.phi_neg_trivial = c.families.empty();
  c.phi_id_trivial = c.phi_neg_trivial && !c.complement_closed;
  return c;
}

StructureDescriptor polymorphism_family(const WeightSet& w) {
  require_non_degenerate_weights(w);
  const std::size_t m = w.m();
  const std::uint32_t mask = w.mask();
  StructureDescriptor d;

  if (m == 2 && mask == bit(1)) {
    d.kind = StructureKind::complement_pair;
    return d;
  }
  if (mask == (bit(0) | bit(m))) {
    d.kind = StructureKind::shared_function;
    return d;
  }
  if (m >= 3 && mask == parity_mask(m, 0)) {
    d.kind = StructureKind::parity_affine;
    d.parity = 0;
    return d;
  }
  if (m >= 3 && mask == parity_mask(m, 1)) {
    d.kind = StructureKind::parity_affine;
    d.parity = 1;
    return d;
  }
  for (std::size_t t = 1; t <= m - 1; ++t) {
    if (mask == range_mask(0, t)) {
      d.kind = StructureKind::threshold_intersecting;
      d.variant = StructureDescriptor::Variant::at_most;
      d.w = t;
      return d;
    }
    if (mask == range_mask(m - t, m)) {
      d.kind = StructureKind::threshold_intersecting;
      d.variant = StructureDescriptor::Variant::at_least;
      d.w = t;
      return d;
    }
  }
  for (std::size_t t = 1; t + 2 <= m; ++t) {
    if (mask == (range_mask(0, t) | bit(m))) {
      d.kind = StructureKind::threshold_plus_corner;
      d.variant = StructureDescriptor::Variant::at_most;
      d.w = t;
      return d;
    }
    if (mask == (range_mask(m - t, m) | bit(0))) {
      d.kind = StructureKind::threshold_plus_corner;
      d.variant = StructureDescriptor::Variant::at_least;
      d.w = t;
      return d;
    }
  }
  d.kind = StructureKind::dictator_or_certificate;
  d.complement_closed = w.complement_closed();
  return d;
}

std::vector<std::vector<std::uint32_t>> families_from_functions(
    const PolymorphismTuple& fs) {
  std::vector<std::vector<std::uint32_t>> families;
  families.reserve(fs.components.size());
  for (const FunctionTable& f : fs.components) {
    if (f.alphabet_size() != 2)
      throw input_error("indicator families require binary alphabets");
    if (f.arity() > 20) throw capability_error("arity too large for set families");
    std::vector<std::uint32_t> family;
    const auto& table = f.table();
    // With first-argument-least-significant indexing, the table index of the
    // indicator input of S is the bitmask S itself.
    for (std::uint32_t s = 0; s < table.size(); ++s)
      if (table[s] == 1) family.push_back(s);
    families.push_back(std::move(family));
  }
  return families;
}

namespace {

bool choices_intersect(const std::vector<std::vector<std::uint32_t>>& families,
                       const std::vector<std::size_t>& picked, std::size_t depth,
                       std::uint32_t acc) {
  if (depth == picked.size()) return acc != 0;
  for (std::uint32_t s : families[picked[depth]])
    if (!choices_intersect(families, picked, depth + 1, acc & s)) return false;
  return true;
}

}  // namespace

bool check_kwise_intersecting(const std::vector<std::vector<std::uint32_t>>& families,
                              std::size_t k) {
  if (k == 0 || k > families.size()) return true;
  std::vector<std::size_t> picked(k);
  for (std::size_t i = 0; i < k; ++i) picked[i] = i;
  while (true) {
    if (!choices_intersect(families, picked, 0, ~std::uint32_t{0})) return false;
    // Next k-combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && picked[i - 1] == families.size() - k + (i - 1)) --i;
    if (i == 0) return true;
    ++picked[i - 1];
    for (std::size_t j = i; j < k; ++j) picked[j] = picked[j - 1] + 1;
  }
}

StructureChecker::StructureChecker(const Predicate& p, StructureDescriptor descriptor)
    : m_(p.signature().arity()), descriptor_(descriptor) {
  if (!p.signature().all_binary())
    throw input_error("structure checks apply to binary signatures only");
  if (descriptor_.kind == StructureKind::dictator_or_certificate)
    minimal_ = minimal_certificates(p);
}

bool StructureChecker::operator()(const PolymorphismTuple& fs) const {
  if (fs.components.size() != m_)
    throw input_error("tuple length does not match coordinate count");
  const std::size_t n = fs.components.front().arity();
  for (const FunctionTable& f : fs.components) {
    if (f.alphabet_size() != 2) throw input_error("binary tables required");
    if (f.arity() != n) throw input_error("components must share one arity");
  }

  switch (descriptor_.kind) {
    case StructureKind::complement_pair:
      return fs.components[1] == conjugate_by_negation(fs.components[0]);

    case StructureKind::shared_function: {
      const FunctionTable& first = fs.components.front();
      return std::all_of(fs.components.begin(), fs.components.end(),
                         [&](const FunctionTable& f) { return f == first; });
    }

    case StructureKind::parity_affine: {
      std::optional<std::vector<std::size_t>> common_j;
      Value b_xor = 0;
      for (const FunctionTable& f : fs.components) {
        auto affine = detect_affine(f);
        if (!affine) return false;
        if (!common_j)
          common_j = affine->first;
        else if (*common_j != affine->first)
          return false;
        b_xor ^= affine->second;
      }
      const Value target =
          (descriptor_.parity == 1 && common_j->size() % 2 == 0) ? 1 : 0;
      return b_xor == target;
    }

    case StructureKind::threshold_intersecting: {
      std::vector<std::vector<std::uint32_t>> families;
      if (descriptor_.variant == StructureDescriptor::Variant::at_most) {
        families = families_from_functions(fs);
      } else {
        PolymorphismTuple flipped;
        flipped.components.reserve(m_);
        for (const FunctionTable& f : fs.components)
          flipped.components.push_back(conjugate_by_negation(f));
        families = families_from_functions(flipped);
      }
      return check_kwise_intersecting(families, descriptor_.w + 1);
    }

    case StructureKind::threshold_plus_corner: {
      const bool at_most =
          descriptor_.variant == StructureDescriptor::Variant::at_most;
      const FunctionTable& first = fs.components.front();
      const bool all_equal =
          std::all_of(fs.components.begin(), fs.components.end(),
                      [&](const FunctionTable& f) { return f == first; });
      if (all_equal &&
          (at_most ? detect_and_of_subset(first) : detect_or_of_subset(first)))
        return true;
      const Value filler = at_most ? 0 : 1;
      std::size_t constant_count = 0;
      for (const FunctionTable& f : fs.components)
        if (f.constant_value() == filler) ++constant_count;
      return constant_count >= m_ - descriptor_.w;
    }

    case StructureKind::dictator_or_certificate: {
      for (std::size_t j = 0; j < n; ++j) {
        const FunctionTable proj = FunctionTable::projection(2, n, j);
        if (std::all_of(fs.components.begin(), fs.components.end(),
                        [&](const FunctionTable& f) { return f == proj; }))
          return true;
        if (descriptor_.complement_closed) {
          std::vector<Value> flipped = proj.table();
          for (Value& v : flipped) v ^= 1;
          const FunctionTable anti(2, n, std::move(flipped));
          if (std::all_of(fs.components.begin(), fs.components.end(),
                          [&](const FunctionTable& f) { return f == anti; }))
            return true;
        }
      }
      std::vector<std::optional<Value>> constants(m_);
      for (std::size_t i = 0; i < m_; ++i)
        constants[i] = fs.components[i].constant_value();
      for (const Certificate& rho : minimal_) {
        bool conforms = true;
        for (const auto& [c, v] : rho.entries()) {
          if (!constants[c] || *constants[c] != v) {
            conforms = false;
            break;
          }
        }
        if (conforms) return true;
      }
      return false;
    }
  }
  return false;
}

bool check_structure(const Predicate& p, const StructureDescriptor& descriptor,
                     const PolymorphismTuple& fs) {
  return StructureChecker(p, descriptor)(fs);
}

std::vector<AtlasRow> atlas_sweep(std::size_t max_m, bool include_counts,
                                  const EnumerationOptions& options) {
  if (max_m > 26) throw capability_error("atlas limited to m <= 26");
  std::vector<AtlasRow> rows;
  for (std::size_t m = 1; m <= max_m; ++m) {
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (m + 1)); ++mask) {
      WeightSet w = WeightSet::from_mask(m, mask);
      if (!w.non_degenerate()) continue;

      AtlasRow row;
      row.m = m;
      row.mask = mask;
      row.weights = w.weights();
      row.classification = classify_symmetric(w);
      row.structure = polymorphism_family(w);

      const Predicate p = w.predicate();
      const PolymorphismClassifier classifier(p);
      const FunctionTable id = FunctionTable::identity(2);
      const FunctionTable neg = FunctionTable::negation();

      // One arity-2 pass settles both brute verdicts (and the count).
      bool neither_neg = false, neither_id = false;
      std::uint64_t count2 = 0;
      enumerate_polymorphisms(p, 2, options, [&](const PolymorphismTuple& fs) {
        ++count2;
        bool cert = false;
        {
          std::vector<std::optional<Value>> constants(m);
          for (std::size_t i = 0; i < m; ++i)
            constants[i] = fs.components[i].constant_value();
          for (const Certificate& rho : classifier.minimal_certs()) {
            bool conforms = true;
            for (const auto& [c, v] : rho.entries())
              if (!constants[c] || *constants[c] != v) {
                conforms = false;
                break;
              }
            if (conforms) {
              cert = true;
              break;
            }
          }
        }
        bool dict_id = false, dict_neg = false;
        for (std::size_t j = 0; j < 2 && !(dict_id && dict_neg); ++j) {
          bool all_id = true, all_id_neg = true;
          for (std::size_t i = 0; i < m && (all_id || all_id_neg); ++i) {
            auto phi = factor_through_argument(fs.components[i], j);
            if (!phi || !(*phi == id || *phi == neg)) {
              all_id = all_id_neg = false;
            } else if (!(*phi == id)) {
              all_id = false;
            }
          }
          dict_id = dict_id || all_id;
          dict_neg = dict_neg || all_id_neg;
        }
        if (!cert && !dict_neg) neither_neg = true;
        if (!cert && !dict_id) neither_id = true;
        return include_counts || !(neither_neg && neither_id);
      });
      row.brute_neg_trivial = !neither_neg;
      row.brute_id_trivial = !neither_id;
      if (include_counts) {
        row.count_n2 = count2;
        row.count_n1 = count_polymorphisms(p, 1, options);
      }
      row.agree =
          row.classification.phi_neg_trivial == row.brute_neg_trivial &&
          row.classification.phi_id_trivial == row.brute_id_trivial;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace polytriv
