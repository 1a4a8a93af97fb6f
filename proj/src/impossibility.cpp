#include "polytriv/impossibility.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "polytriv/errors.hpp"

namespace polytriv {

namespace {

// |P|^arity, saturating at uint64 max.
std::uint64_t saturating_power(std::uint64_t base, std::size_t exponent) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    result *= base;
  }
  return result;
}

bool verify_if_affordable(const Predicate& p, const PolymorphismTuple& fs,
                          std::uint64_t max_matrices) {
  const std::uint64_t matrices = saturating_power(p.size(), fs.arity());
  if (matrices > max_matrices) return false;
  if (!is_polymorphism(p, fs))
    throw std::logic_error("constructed witness failed polymorphism re-check");
  return true;
}

// The unary map x -> f(sigma, x), as a permutation table.
FunctionTable row_section(const FunctionTable& f, Value sigma) {
  const std::size_t k = f.alphabet_size();
  std::vector<Value> row(k);
  for (std::size_t x = 0; x < k; ++x)
    row[x] = f.table()[sigma + k * x];
  return FunctionTable(k, 1, std::move(row));
}

std::uint64_t permutation_order(const FunctionTable& pi) {
  const std::size_t k = pi.alphabet_size();
  std::vector<bool> seen(k, false);
  std::uint64_t order = 1;
  for (std::size_t start = 0; start < k; ++start) {
    if (seen[start]) continue;
    std::size_t length = 0;
    std::size_t x = start;
    do {
      seen[x] = true;
      ++length;
      x = pi.table()[x];
    } while (x != start);
    order = std::lcm(order, static_cast<std::uint64_t>(length));
  }
  return order;
}

}  // namespace

bool is_unanimous(const FunctionTable& f) {
  const std::size_t k = f.alphabet_size();
  const std::size_t n = f.arity();
  for (Value sigma = 0; sigma < k; ++sigma) {
    std::size_t index = 0;
    for (std::size_t j = 0; j < n; ++j) index = index * k + sigma;
    if (f.table()[index] != sigma) return false;
  }
  return true;
}

bool is_unanimous(const PolymorphismTuple& fs) {
  return std::all_of(fs.components.begin(), fs.components.end(),
                     [](const FunctionTable& f) { return is_unanimous(f); });
}

bool is_supportive(const FunctionTable& f) {
  const std::size_t k = f.alphabet_size();
  const std::size_t n = f.arity();
  for (std::size_t index = 0; index < f.table().size(); ++index) {
    const Value out = f.table()[index];
    std::size_t rest = index;
    bool among_inputs = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (static_cast<Value>(rest % k) == out) {
        among_inputs = true;
        break;
      }
      rest /= k;
    }
    if (!among_inputs) return false;
  }
  return true;
}

bool is_common_projection(const PolymorphismTuple& fs) {
  if (fs.components.empty()) return false;
  const std::size_t n = fs.components.front().arity();
  for (std::size_t j = 0; j < n; ++j) {
    bool all = true;
    for (const FunctionTable& f : fs.components) {
      if (f != FunctionTable::projection(f.alphabet_size(), n, j)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

PolymorphismTuple closure_witness(const Predicate& p, std::size_t i0, Value sigma0) {
  const Signature& sig = p.signature();
  if (i0 >= sig.arity()) throw input_error("coordinate out of range");
  if (sigma0 >= sig.size(i0)) throw input_error("value out of range");
  if (!closed_under_setting(p, i0, sigma0))
    throw input_error("predicate is not closed under overwriting coordinate " +
                      std::to_string(i0) + " with " + std::to_string(sigma0));

  PolymorphismTuple witness;
  witness.components.reserve(sig.arity());
  for (std::size_t i = 0; i < sig.arity(); ++i) {
    const std::size_t k = sig.size(i);
    if (i != i0) {
      witness.components.push_back(FunctionTable::projection(k, 2, 0));
      continue;
    }
    std::vector<Value> table(k * k);
    for (std::size_t x2 = 0; x2 < k; ++x2)
      for (std::size_t x1 = 0; x1 < k; ++x1)
        table[x1 + k * x2] =
            (x2 == sigma0) ? sigma0 : static_cast<Value>(x1);
    witness.components.push_back(FunctionTable(k, 2, std::move(table)));
  }
  return witness;
}

PolymorphismTuple iterate_polymorphism(const PolymorphismTuple& fs, std::uint64_t r) {
  if (r < 1) throw input_error("iteration exponent must be at least 1");
  PolymorphismTuple result;
  result.components.reserve(fs.components.size());
  for (const FunctionTable& f : fs.components) {
    if (f.arity() != 2) throw input_error("power iteration needs arity-2 tables");
    const std::size_t k = f.alphabet_size();
    const auto& t = f.table();
    std::vector<Value> cur = t;  // f itself, arity 2
    for (std::uint64_t step = 1; step < r; ++step) {
      const std::uint64_t next_len =
          saturating_power(k, 1) * static_cast<std::uint64_t>(cur.size());
      if (next_len > (std::uint64_t{1} << 26))
        throw capability_error("iterated table exceeds the size cap");
      std::vector<Value> next(static_cast<std::size_t>(next_len));
      for (std::size_t rest = 0; rest < cur.size(); ++rest) {
        const std::size_t folded = k * static_cast<std::size_t>(cur[rest]);
        for (std::size_t x0 = 0; x0 < k; ++x0)
          next[x0 + k * rest] = t[x0 + folded];
      }
      cur = std::move(next);
    }
    result.components.push_back(
        FunctionTable(k, static_cast<std::size_t>(r) + 1, std::move(cur)));
  }
  return result;
}

std::uint64_t default_power_exponent(const Signature& sig) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < sig.arity(); ++i) {
    const std::uint64_t f = factorial(sig.size(i));
    if (r > std::numeric_limits<std::uint64_t>::max() / f)
      throw capability_error("power exponent overflows");
    r *= f;
  }
  return r;
}

std::uint64_t tight_power_exponent(const PolymorphismTuple& fs) {
  std::uint64_t r = 1;
  for (const FunctionTable& f : fs.components) {
    if (!is_latin_square(f)) throw input_error("tight exponent needs latin squares");
    for (Value sigma = 0; sigma < f.alphabet_size(); ++sigma)
      r = std::lcm(r, permutation_order(row_section(f, sigma)));
  }
  return r;
}

PolymorphismTuple latin_power_witness(const Predicate& p,
                                      const PolymorphismTuple& fs,
                                      const ImpossibilityOptions& options) {
  require_matches(p.signature(), fs);
  for (const FunctionTable& f : fs.components)
    if (!is_latin_square(f))
      throw input_error("every component must be a latin square");
  if (!is_polymorphism(p, fs))
    throw input_error("the latin-square tuple is not a polymorphism");

  const std::uint64_t r = options.tight_exponent
                              ? tight_power_exponent(fs)
                              : default_power_exponent(p.signature());
  if (r + 1 > options.max_witness_arity)
    throw capability_error("witness arity " + std::to_string(r + 1) +
                           " exceeds the cap of " +
                           std::to_string(options.max_witness_arity));
  PolymorphismTuple witness = iterate_polymorphism(fs, r);
  if (!is_unanimous(witness))
    throw std::logic_error("power iterate failed the diagonal identity");
  return witness;
}

UnanimityVerdict check_impossibility_unanimity(const Predicate& p,
                                               std::size_t arity,
                                               const ImpossibilityOptions& options) {
  require_non_degenerate(p);
  if (arity < 1) throw input_error("arity must be at least 1");
  const Signature& sig = p.signature();

  UnanimityVerdict verdict;
  verdict.arity_checked = arity;

  EnumerationOptions enumeration = options.enumeration;
  const auto user_pin = enumeration.pin;
  enumeration.pin = [&sig, arity, user_pin](
                        std::size_t coordinate,
                        std::size_t entry) -> std::optional<Value> {
    const std::size_t k = sig.size(coordinate);
    std::size_t rest = entry;
    const Value first = static_cast<Value>(rest % k);
    bool diagonal = true;
    for (std::size_t j = 0; j < arity; ++j) {
      if (static_cast<Value>(rest % k) != first) {
        diagonal = false;
        break;
      }
      rest /= k;
    }
    if (diagonal) return first;
    return user_pin ? user_pin(coordinate, entry) : std::nullopt;
  };

  enumerate_polymorphisms(p, arity, enumeration,
                          [&](const PolymorphismTuple& fs) {
                            if (is_common_projection(fs)) return true;
                            verdict.witness = fs;
                            verdict.source = WitnessSource::search;
                            return false;
                          });
  if (verdict.witness) {
    verdict.witness_verified =
        verify_if_affordable(p, *verdict.witness, options.max_verify_matrices);
    return verdict;
  }

  if (options.run_detectors) {
    for (std::size_t i = 0; i < sig.arity() && !verdict.witness; ++i)
      for (Value sigma = 0; sigma < sig.size(i); ++sigma)
        if (closed_under_setting(p, i, sigma)) {
          verdict.witness = closure_witness(p, i, sigma);
          verdict.source = WitnessSource::closure;
          break;
        }
    if (!verdict.witness)
      if (auto fs = find_and_or_polymorphism(p, options.detectors)) {
        verdict.witness = *fs;
        verdict.source = WitnessSource::and_or;
      }
    if (!verdict.witness)
      if (auto fs = find_latin_square_polymorphism(p, nullptr, options.detectors)) {
        verdict.witness = latin_power_witness(p, *fs, options);
        verdict.source = WitnessSource::latin_power;
      }
    if (verdict.witness) {
      verdict.witness_verified = verify_if_affordable(
          p, *verdict.witness, options.max_verify_matrices);
      return verdict;
    }
  }

  verdict.is_impossibility_domain = true;
  return verdict;
}

}  // namespace polytriv
