#include "polytriv/function_table.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace polytriv {

namespace {

constexpr std::size_t kMaxTableSize = std::size_t{1} << 26;

std::size_t checked_power(std::size_t k, std::size_t n) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (size > kMaxTableSize / k) throw capability_error("function table too large");
    size *= k;
  }
  return size;
}

void require_binary(const FunctionTable& f, const char* what) {
  if (f.alphabet_size() != 2)
    throw input_error(std::string(what) + " requires a binary alphabet");
}

}  // namespace

FunctionTable::FunctionTable(std::size_t alphabet_size, std::size_t arity,
                             std::vector<Value> table)
    : k_(alphabet_size), n_(arity), table_(std::move(table)) {
  if (k_ < 2 || k_ > 255) throw input_error("alphabet size must be in [2, 255]");
  if (table_.size() != checked_power(k_, n_))
    throw input_error("table has " + std::to_string(table_.size()) +
                      " entries, expected " + std::to_string(checked_power(k_, n_)));
  for (Value v : table_)
    if (v >= k_) throw input_error("table value out of range");
}

FunctionTable FunctionTable::identity(std::size_t alphabet_size) {
  std::vector<Value> t(alphabet_size);
  std::iota(t.begin(), t.end(), Value{0});
  return FunctionTable(alphabet_size, 1, std::move(t));
}

FunctionTable FunctionTable::negation() { return FunctionTable(2, 1, {1, 0}); }

FunctionTable FunctionTable::constant(std::size_t alphabet_size, std::size_t arity,
                                      Value value) {
  return FunctionTable(alphabet_size, arity,
                       std::vector<Value>(checked_power(alphabet_size, arity), value));
}

FunctionTable FunctionTable::projection(std::size_t alphabet_size, std::size_t arity,
                                        std::size_t argument) {
  if (argument >= arity) throw input_error("projection argument out of range");
  std::size_t size = checked_power(alphabet_size, arity);
  std::size_t stride = checked_power(alphabet_size, argument);
  std::vector<Value> t(size);
  for (std::size_t idx = 0; idx < size; ++idx)
    t[idx] = static_cast<Value>((idx / stride) % alphabet_size);
  return FunctionTable(alphabet_size, arity, std::move(t));
}

std::size_t FunctionTable::index_of(const Tuple& args) const {
  if (args.size() != n_)
    throw input_error("argument tuple length does not match arity");
  std::size_t idx = 0;
  for (std::size_t j = n_; j-- > 0;) {
    if (args[j] >= k_) throw input_error("argument value out of range");
    idx = idx * k_ + args[j];
  }
  return idx;
}

FunctionTable FunctionTable::fix_last_argument(Value sigma) const {
  if (n_ == 0) throw input_error("cannot pin an argument of a nullary table");
  if (sigma >= k_) throw input_error("pinned value out of range");
  std::size_t reduced = table_.size() / k_;
  std::vector<Value> t(table_.begin() + sigma * reduced,
                       table_.begin() + (sigma + 1) * reduced);
  return FunctionTable(k_, n_ - 1, std::move(t));
}

std::optional<Value> FunctionTable::constant_value() const {
  if (table_.empty()) return std::nullopt;
  Value v = table_.front();
  for (Value w : table_)
    if (w != v) return std::nullopt;
  return v;
}

bool FunctionTable::is_permutation() const {
  if (n_ != 1) throw input_error("bijectivity is only defined for unary tables");
  std::vector<bool> seen(k_, false);
  for (Value v : table_) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::strong_ordering FunctionTable::operator<=>(const FunctionTable& other) const noexcept {
  if (auto c = k_ <=> other.k_; c != 0) return c;
  if (auto c = n_ <=> other.n_; c != 0) return c;
  return table_ <=> other.table_;
}

std::optional<FunctionTable> factor_through_argument(const FunctionTable& f,
                                                     std::size_t argument) {
  const std::size_t k = f.alphabet_size();
  if (argument >= f.arity()) throw input_error("argument index out of range");
  std::size_t stride = 1;
  for (std::size_t j = 0; j < argument; ++j) stride *= k;
  std::vector<Value> phi(k, k);  // k marks "not yet seen"
  const auto& table = f.table();
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    std::size_t digit = (idx / stride) % k;
    if (phi[digit] == k)
      phi[digit] = table[idx];
    else if (phi[digit] != table[idx])
      return std::nullopt;
  }
  return FunctionTable(k, 1, std::move(phi));
}

UnaryAnalysis analyze(const FunctionTable& f) {
  UnaryAnalysis a;
  a.constant = f.constant_value();
  if (a.constant)
    a.kind = UnaryKind::constant;
  else if (f.arity() == 1 && f.is_permutation())
    a.kind = UnaryKind::permutation;
  for (std::size_t j = 0; j < f.arity(); ++j)
    if (auto phi = factor_through_argument(f, j))
      a.dictators.push_back({j, std::move(*phi)});
  return a;
}

FunctionTable permutation_power(const FunctionTable& phi, std::uint64_t r) {
  if (phi.arity() != 1 || !phi.is_permutation())
    throw input_error("power requires a unary bijection");
  FunctionTable acc = FunctionTable::identity(phi.alphabet_size());
  FunctionTable base = phi;
  while (r > 0) {
    if (r & 1) acc = compose_unary(base, acc);
    base = compose_unary(base, base);
    r >>= 1;
  }
  return acc;
}

std::uint64_t factorial(std::size_t k) {
  if (k > 20) throw capability_error("factorial exceeds 64 bits");
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

FunctionTable compose_unary(const FunctionTable& f, const FunctionTable& inner) {
  if (f.arity() != 1 || inner.arity() != 1 ||
      f.alphabet_size() != inner.alphabet_size())
    throw input_error("composition requires unary tables on one alphabet");
  std::vector<Value> t(f.alphabet_size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = f.table()[inner.table()[x]];
  return FunctionTable(f.alphabet_size(), 1, std::move(t));
}

FunctionTable conjugate_by_negation(const FunctionTable& f) {
  require_binary(f, "negation conjugation");
  const std::size_t mask = f.table().size() - 1;
  std::vector<Value> t(f.table().size());
  for (std::size_t idx = 0; idx <= mask; ++idx)
    t[idx] = f.table()[idx ^ mask] ^ 1;
  return FunctionTable(2, f.arity(), std::move(t));
}

std::optional<std::pair<std::vector<std::size_t>, Value>> detect_affine(
    const FunctionTable& f) {
  require_binary(f, "affine detection");
  const auto& table = f.table();
  const Value b = table[0];
  std::size_t j_mask = 0;
  for (std::size_t j = 0; j < f.arity(); ++j)
    if (table[std::size_t{1} << j] != b) j_mask |= std::size_t{1} << j;
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    Value parity = static_cast<Value>(__builtin_parityll(idx & j_mask));
    if (table[idx] != (parity ^ b)) return std::nullopt;
  }
  std::vector<std::size_t> j_set;
  for (std::size_t j = 0; j < f.arity(); ++j)
    if (j_mask & (std::size_t{1} << j)) j_set.push_back(j);
  return std::make_pair(std::move(j_set), b);
}

namespace {

std::optional<std::vector<std::size_t>> detect_mask_form(
    const FunctionTable& f, bool is_and) {
  const auto& table = f.table();
  const std::size_t full = table.size() - 1;
  std::size_t j_mask = 0;
  for (std::size_t j = 0; j < f.arity(); ++j) {
    std::size_t probe = is_and ? (full ^ (std::size_t{1} << j)) : (std::size_t{1} << j);
    Value hit = is_and ? 0 : 1;
    if (table[probe] == hit) j_mask |= std::size_t{1} << j;
  }
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    bool expect = is_and ? (idx & j_mask) == j_mask : (idx & j_mask) != 0;
    if (table[idx] != static_cast<Value>(expect)) return std::nullopt;
  }
  std::vector<std::size_t> j_set;
  for (std::size_t j = 0; j < f.arity(); ++j)
    if (j_mask & (std::size_t{1} << j)) j_set.push_back(j);
  return j_set;
}

}  // namespace

std::optional<std::vector<std::size_t>> detect_and_of_subset(const FunctionTable& f) {
  require_binary(f, "conjunction detection");
  return detect_mask_form(f, /*is_and=*/true);
}

std::optional<std::vector<std::size_t>> detect_or_of_subset(const FunctionTable& f) {
  require_binary(f, "disjunction detection");
  return detect_mask_form(f, /*is_and=*/false);
}

bool is_latin_square(const FunctionTable& f) {
  if (f.arity() != 2) throw input_error("latin square check requires arity 2");
  const std::size_t k = f.alphabet_size();
  const auto& table = f.table();
  for (std::size_t a = 0; a < k; ++a) {
    std::uint64_t row_seen = 0, col_seen = 0;
    for (std::size_t t = 0; t < k; ++t) {
      row_seen |= std::uint64_t{1} << table[a + k * t];
      col_seen |= std::uint64_t{1} << table[t + k * a];
    }
    const std::uint64_t all = (std::uint64_t{1} << k) - 1;
    if (row_seen != all || col_seen != all) return false;
  }
  return true;
}

std::vector<FunctionTable> enumerate_latin_squares(std::size_t alphabet_size,
                                                   std::size_t max_alphabet) {
  if (alphabet_size > max_alphabet)
    throw capability_error("latin square enumeration limited to alphabets <= " +
                           std::to_string(max_alphabet));
  if (alphabet_size > 8)
    throw capability_error("latin square enumeration limited to alphabets <= 8");
  const std::size_t k = alphabet_size;
  std::vector<FunctionTable> out;
  std::vector<Value> table(k * k, 0);
  std::vector<std::uint32_t> row_used(k, 0), col_used(k, 0);
  // Positions in table-index order (first argument least significant),
  // values ascending, so the output is in canonical table order.
  auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (pos == table.size()) {
      out.emplace_back(k, 2, table);
      return;
    }
    const std::size_t a = pos % k, b = pos / k;
    for (std::size_t v = 0; v < k; ++v) {
      const std::uint32_t bit = std::uint32_t{1} << v;
      if ((row_used[a] & bit) || (col_used[b] & bit)) continue;
      row_used[a] |= bit;
      col_used[b] |= bit;
      table[pos] = static_cast<Value>(v);
      self(self, pos + 1);
      row_used[a] &= ~bit;
      col_used[b] &= ~bit;
    }
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace polytriv
