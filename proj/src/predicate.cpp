#include "polytriv/predicate.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

namespace polytriv {

namespace {

constexpr std::size_t kMaxCubeSize = std::size_t{1} << 26;

std::string coord_str(std::size_t i) { return "coordinate " + std::to_string(i); }

}  // namespace

Signature::Signature(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw input_error("signature needs at least one coordinate");
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    std::size_t k = sizes_[i];
    if (k < 2) throw input_error(coord_str(i) + ": alphabet size must be >= 2");
    if (k > 255) throw input_error(coord_str(i) + ": alphabet size must be <= 255");
    if (cube_size_ > kMaxCubeSize / k)
      throw capability_error("product cube too large to index");
    cube_size_ *= k;
  }
}

bool Signature::all_binary() const noexcept {
  return std::all_of(sizes_.begin(), sizes_.end(),
                     [](std::size_t k) { return k == 2; });
}

std::size_t Signature::index_of(const Tuple& t) const {
  if (t.size() != sizes_.size())
    throw input_error("tuple length " + std::to_string(t.size()) +
                      " does not match signature arity " +
                      std::to_string(sizes_.size()));
  std::size_t idx = 0;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (t[i] >= sizes_[i])
      throw input_error(coord_str(i) + ": value " + std::to_string(t[i]) +
                        " out of range");
    idx = idx * sizes_[i] + t[i];
  }
  return idx;
}

Tuple Signature::tuple_at(std::size_t index) const {
  if (index >= cube_size_) throw input_error("tuple index out of range");
  Tuple t(sizes_.size());
  for (std::size_t i = sizes_.size(); i-- > 0;) {
    t[i] = static_cast<Value>(index % sizes_[i]);
    index /= sizes_[i];
  }
  return t;
}

Certificate::Certificate(std::vector<std::pair<std::size_t, Value>> entries)
    : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i - 1].first == entries_[i].first)
      throw input_error("partial assignment pins " +
                        coord_str(entries_[i].first) + " twice");
}

bool Certificate::defines(std::size_t coordinate) const noexcept {
  return value_at(coordinate).has_value();
}

std::optional<Value> Certificate::value_at(std::size_t coordinate) const noexcept {
  for (const auto& [c, v] : entries_)
    if (c == coordinate) return v;
  return std::nullopt;
}

Certificate Certificate::without(std::size_t coordinate) const {
  std::vector<std::pair<std::size_t, Value>> kept;
  kept.reserve(entries_.size());
  for (const auto& e : entries_)
    if (e.first != coordinate) kept.push_back(e);
  return Certificate(std::move(kept));
}

Predicate Predicate::from_tuples(Signature sig, std::vector<Tuple> tuples) {
  for (const Tuple& t : tuples) sig.index_of(t);  // validates length and range
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
  return Predicate(std::move(sig), std::move(tuples));
}

Predicate::Predicate(Signature sig, std::vector<Tuple> tuples)
    : sig_(std::move(sig)), tuples_(std::move(tuples)), member_(sig_.cube_size(), false) {
  for (const Tuple& t : tuples_) member_[sig_.index_of(t)] = true;
}

bool Predicate::contains(const Tuple& t) const { return member_[sig_.index_of(t)]; }

ValidationReport validate_non_degenerate(const Predicate& p) {
  ValidationReport report;
  const Signature& sig = p.signature();
  const std::size_t m = sig.arity();

  for (std::size_t i = 0; i < m; ++i) {
    std::vector<bool> seen(sig.size(i), false);
    for (const Tuple& t : p.tuples()) seen[t[i]] = true;
    for (std::size_t v = 0; v < seen.size(); ++v)
      if (!seen[v])
        report.projection_gaps.push_back({i, static_cast<Value>(v)});
  }

  for (std::size_t i = 0; i < m; ++i) {
    bool matters = false;
    for (const Tuple& t : p.tuples()) {
      for (std::size_t v = 0; v < sig.size(i) && !matters; ++v) {
        if (v == t[i]) continue;
        if (!p.contains(set_coordinate(t, i, static_cast<Value>(v)))) matters = true;
      }
      if (matters) break;
    }
    if (!matters) report.insensitive_coordinates.push_back(i);
  }

  report.ok = report.projection_gaps.empty() && report.insensitive_coordinates.empty();
  return report;
}

void require_non_degenerate(const Predicate& p) {
  ValidationReport report = validate_non_degenerate(p);
  if (report.ok) return;
  if (!report.projection_gaps.empty()) {
    const auto& gap = report.projection_gaps.front();
    throw degenerate_error("degenerate predicate: value " +
                           std::to_string(gap.missing) + " of " +
                           coord_str(gap.coordinate) + " never occurs");
  }
  throw degenerate_error("degenerate predicate: " +
                         coord_str(report.insensitive_coordinates.front()) +
                         " never influences membership");
}

Tuple set_coordinate(Tuple y, std::size_t coordinate, Value sigma) {
  y.at(coordinate) = sigma;
  return y;
}

bool closed_under_setting(const Predicate& p, std::size_t coordinate, Value sigma) {
  const Signature& sig = p.signature();
  if (coordinate >= sig.arity()) throw input_error("coordinate out of range");
  if (sigma >= sig.size(coordinate))
    throw input_error("value out of range for " + coord_str(coordinate));
  for (const Tuple& t : p.tuples())
    if (!p.contains(set_coordinate(t, coordinate, sigma))) return false;
  return true;
}

namespace {

// Runs fn over every total extension of rho, stopping early on false.
template <typename Fn>
bool for_each_extension(const Signature& sig, const Certificate& rho, Fn&& fn) {
  const std::size_t m = sig.arity();
  std::vector<std::size_t> free_coords;
  Tuple t(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (auto v = rho.value_at(i))
      t[i] = *v;
    else
      free_coords.push_back(i);
  }
  // Odometer over the free coordinates, first free coordinate most
  // significant, matching lexicographic tuple order.
  while (true) {
    if (!fn(t)) return false;
    std::size_t pos = free_coords.size();
    while (pos > 0) {
      std::size_t i = free_coords[pos - 1];
      if (static_cast<std::size_t>(t[i]) + 1 < sig.size(i)) {
        ++t[i];
        break;
      }
      t[i] = 0;
      --pos;
    }
    if (pos == 0) return true;
  }
}

}  // namespace

bool is_certificate(const Predicate& p, const Certificate& rho) {
  const Signature& sig = p.signature();
  for (const auto& [c, v] : rho.entries()) {
    if (c >= sig.arity()) throw input_error("partial assignment pins " +
                                            coord_str(c) + " beyond arity");
    if (v >= sig.size(c))
      throw input_error("partial assignment value out of range for " + coord_str(c));
  }
  return for_each_extension(sig, rho,
                            [&](const Tuple& t) { return p.contains(t); });
}

std::vector<CertificateRecord> enumerate_certificates(const Predicate& p,
                                                      std::size_t max_domain_size) {
  const Signature& sig = p.signature();
  const std::size_t m = sig.arity();
  std::vector<CertificateRecord> out;

  std::set<Certificate> found;
  auto minimal = [&](const Certificate& rho) {
    for (const auto& [c, v] : rho.entries())
      if (is_certificate(p, rho.without(c))) return false;
    return true;
  };

  // Domains in lexicographic order as ascending coordinate lists; for each
  // domain, pinned values in ascending numeric order.
  std::vector<std::size_t> domain;
  auto visit_domain = [&]() {
    std::vector<std::pair<std::size_t, Value>> entries;
    entries.reserve(domain.size());
    for (std::size_t c : domain) entries.emplace_back(c, 0);
    while (true) {
      Certificate rho{entries};
      if (is_certificate(p, rho)) {
        found.insert(rho);
        out.push_back({rho, minimal(rho)});
      }
      std::size_t pos = entries.size();
      while (pos > 0) {
        auto& [c, v] = entries[pos - 1];
        if (static_cast<std::size_t>(v) + 1 < sig.size(c)) {
          ++v;
          break;
        }
        v = 0;
        --pos;
      }
      if (pos == 0) return;
    }
  };

  auto recurse = [&](auto&& self, std::size_t start) -> void {
    visit_domain();
    if (domain.size() == max_domain_size) return;
    for (std::size_t c = start; c < m; ++c) {
      domain.push_back(c);
      self(self, c + 1);
      domain.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

std::vector<Certificate> minimal_certificates(const Predicate& p) {
  std::vector<Certificate> out;
  for (auto& rec : enumerate_certificates(p, p.signature().arity()))
    if (rec.minimal) out.push_back(std::move(rec.certificate));
  return out;
}

Predicate symmetric_predicate(std::size_t m, const std::vector<std::size_t>& weights) {
  if (m == 0) throw input_error("symmetric predicate needs at least one coordinate");
  if (m > 26) throw capability_error("symmetric predicate limited to m <= 26");
  std::set<std::size_t> w_set;
  for (std::size_t w : weights) {
    if (w > m)
      throw input_error("weight " + std::to_string(w) + " exceeds arity " +
                        std::to_string(m));
    w_set.insert(w);
  }
  std::vector<Tuple> tuples;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::size_t weight = 0;
    Tuple t(m);
    for (std::size_t i = 0; i < m; ++i) {
      Value bit = (mask >> (m - 1 - i)) & 1;  // coordinate 0 most significant
      t[i] = bit;
      weight += bit;
    }
    if (w_set.count(weight)) tuples.push_back(std::move(t));
  }
  return Predicate::from_tuples(Signature(std::vector<std::size_t>(m, 2)),
                                std::move(tuples));
}

Predicate nae_predicate() { return symmetric_predicate(3, {1, 2}); }

bool complement_closed(const Predicate& p) {
  return bitflip_predicate(p) == p;
}

Predicate bitflip_predicate(const Predicate& p) {
  if (!p.signature().all_binary())
    throw input_error("bit flip requires an all-binary signature");
  std::vector<Tuple> flipped;
  flipped.reserve(p.size());
  for (const Tuple& t : p.tuples()) {
    Tuple f(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) f[i] = t[i] ^ 1;
    flipped.push_back(std::move(f));
  }
  return Predicate::from_tuples(p.signature(), std::move(flipped));
}

}  // namespace polytriv
