#include "polytriv/polymorphism.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace polytriv {

namespace {

constexpr std::size_t kMaxMatrices = 4'000'000;
constexpr std::size_t kMaxTableSize = std::size_t{1} << 26;

std::size_t checked_table_size(std::size_t k, std::size_t n) {
  std::size_t size = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (size > kMaxTableSize / k)
      throw capability_error("function tables too large at this arity");
    size *= k;
  }
  return size;
}

}  // namespace

void require_matches(const Signature& sig, const PolymorphismTuple& fs) {
  if (fs.components.size() != sig.arity())
    throw input_error("tuple has " + std::to_string(fs.components.size()) +
                      " components, signature has " + std::to_string(sig.arity()) +
                      " coordinates");
  const std::size_t n = fs.components.front().arity();
  for (std::size_t i = 0; i < fs.components.size(); ++i) {
    if (fs.components[i].alphabet_size() != sig.size(i))
      throw input_error("component alphabet does not match coordinate " +
                        std::to_string(i));
    if (fs.components[i].arity() != n)
      throw input_error("components must share one arity");
  }
}

InputMatrix::InputMatrix(std::vector<Tuple> columns) : columns_(std::move(columns)) {
  if (columns_.empty()) throw input_error("matrix needs at least one column");
  for (const Tuple& c : columns_)
    if (c.size() != columns_.front().size())
      throw input_error("matrix columns must share one length");
}

Tuple InputMatrix::row(std::size_t coordinate) const {
  Tuple r(columns_.size());
  for (std::size_t j = 0; j < columns_.size(); ++j)
    r[j] = columns_[j].at(coordinate);
  return r;
}

Tuple apply(const PolymorphismTuple& fs, const InputMatrix& matrix) {
  const std::size_t m = fs.components.size();
  if (matrix.columns().front().size() != m)
    throw input_error("matrix height does not match tuple length");
  Tuple out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = fs.components[i].eval(matrix.row(i));
  return out;
}

std::optional<InputMatrix> find_violation(const Predicate& p,
                                          const PolymorphismTuple& fs) {
  require_matches(p.signature(), fs);
  const std::size_t n = fs.arity();
  if (n == 0) throw input_error("arity must be >= 1");
  const auto& tuples = p.tuples();
  if (tuples.empty()) return std::nullopt;
  const Signature& sig = p.signature();
  const std::size_t m = sig.arity();

  // Column-index odometer in lexicographic order, last column fastest.
  std::vector<std::size_t> c(n, 0);
  Tuple out(m);
  while (true) {
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t e = 0;
      for (std::size_t j = n; j-- > 0;) e = e * sig.size(i) + tuples[c[j]][i];
      out[i] = fs.components[i].table()[e];
    }
    if (!p.contains(out)) {
      std::vector<Tuple> cols;
      cols.reserve(n);
      for (std::size_t j = 0; j < n; ++j) cols.push_back(tuples[c[j]]);
      return InputMatrix(std::move(cols));
    }
    std::size_t pos = n;
    while (pos > 0) {
      if (++c[pos - 1] < tuples.size()) break;
      c[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) return std::nullopt;
  }
}

bool is_polymorphism(const Predicate& p, const PolymorphismTuple& fs) {
  return !find_violation(p, fs).has_value();
}

namespace {

// Argument matrices with all columns in P, flattened to the table index of
// each row, and bucketed by the last coordinate's row index: a matrix's
// image becomes fully determined exactly when that entry is assigned.
struct Matrices {
  std::size_t count = 0;
  std::vector<std::uint32_t> row_index;            // count * m
  std::vector<std::vector<std::uint32_t>> bucket;  // by last-coordinate entry
};

Matrices build_matrices(const Predicate& p, std::size_t n, std::size_t last_len) {
  const auto& tuples = p.tuples();
  const Signature& sig = p.signature();
  const std::size_t m = sig.arity();
  Matrices mx;
  mx.bucket.resize(last_len);
  if (tuples.empty()) return mx;

  std::size_t count = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (count > kMaxMatrices / tuples.size())
      throw capability_error("too many argument matrices at this arity");
    count *= tuples.size();
  }
  mx.count = count;
  mx.row_index.resize(count * m);

  std::vector<std::size_t> c(n, 0);
  for (std::size_t mat = 0; mat < count; ++mat) {
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t e = 0;
      for (std::size_t j = n; j-- > 0;) e = e * sig.size(i) + tuples[c[j]][i];
      mx.row_index[mat * m + i] = static_cast<std::uint32_t>(e);
    }
    mx.bucket[mx.row_index[mat * m + (m - 1)]].push_back(
        static_cast<std::uint32_t>(mat));
    std::size_t pos = n;
    while (pos > 0) {
      if (++c[pos - 1] < tuples.size()) break;
      c[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
  return mx;
}

// Depth-first assignment of table entries, coordinate-major with values
// ascending, so complete tuples appear in canonical order.
struct Engine {
  const Predicate& p;
  const Signature& sig;
  std::size_t m;
  const std::vector<std::size_t>& table_len;
  const Matrices& mx;
  std::vector<std::vector<std::int16_t>> pins;  // -1 = free entry
  std::atomic<std::uint64_t>& assignments;
  std::uint64_t budget;
  std::atomic<bool>* cancel = nullptr;
  std::uint64_t yielded = 0;
  const PolymorphismVisitor* sink = nullptr;

  std::vector<std::vector<Value>> tables;

  Engine(const Predicate& pred, const Matrices& matrices,
         const std::vector<std::size_t>& lens,
         std::vector<std::vector<std::int16_t>> pinned,
         std::atomic<std::uint64_t>& counter, std::uint64_t budget_limit)
      : p(pred),
        sig(pred.signature()),
        m(sig.arity()),
        table_len(lens),
        mx(matrices),
        pins(std::move(pinned)),
        assignments(counter),
        budget(budget_limit) {
    tables.resize(m);
    for (std::size_t i = 0; i < m; ++i) tables[i].resize(table_len[i]);
  }

  bool image_in_p(std::size_t last_entry) const {
    for (std::uint32_t mat : mx.bucket[last_entry]) {
      const std::uint32_t* rows = &mx.row_index[std::size_t{mat} * m];
      std::size_t idx = 0;
      for (std::size_t i = 0; i < m; ++i)
        idx = idx * sig.sizes()[i] + tables[i][rows[i]];
      if (!p.contains_index(idx)) return false;
    }
    return true;
  }

  bool emit(std::size_t arity) {
    ++yielded;
    PolymorphismTuple fs;
    fs.components.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
      fs.components.emplace_back(sig.sizes()[i], arity, tables[i]);
    return (*sink)(fs);
  }

  // Returns false when the sink (or a cancellation) stopped the search.
  bool fill(std::size_t i, std::size_t e, std::size_t arity) {
    if (e == table_len[i])
      return i + 1 == m ? emit(arity) : fill(i + 1, 0, arity);
    if (cancel && cancel->load(std::memory_order_relaxed)) return false;

    const std::int16_t pinned = pins[i][e];
    const Value lo = pinned >= 0 ? static_cast<Value>(pinned) : Value{0};
    const Value hi =
        pinned >= 0 ? static_cast<Value>(pinned + 1) : static_cast<Value>(sig.sizes()[i]);
    const bool last = i + 1 == m;
    for (Value v = lo; v < hi; ++v) {
      const std::uint64_t used =
          assignments.fetch_add(1, std::memory_order_relaxed) + 1;
      if (used > budget)
        throw budget_error("enumeration budget exhausted", used, yielded);
      tables[i][e] = v;
      if (last && !image_in_p(e)) continue;
      if (!fill(i, e + 1, arity)) return false;
    }
    return true;
  }
};

std::vector<std::vector<std::int16_t>> evaluate_pins(
    const Signature& sig, const std::vector<std::size_t>& table_len,
    const EnumerationOptions& options) {
  std::vector<std::vector<std::int16_t>> pins(sig.arity());
  for (std::size_t i = 0; i < sig.arity(); ++i) {
    pins[i].assign(table_len[i], -1);
    if (!options.pin) continue;
    for (std::size_t e = 0; e < table_len[i]; ++e) {
      if (auto v = options.pin(i, e)) {
        if (*v >= sig.size(i)) throw input_error("pinned value out of range");
        pins[i][e] = static_cast<std::int16_t>(*v);
      }
    }
  }
  return pins;
}

}  // namespace

void enumerate_polymorphisms(const Predicate& p, std::size_t arity,
                             const EnumerationOptions& options,
                             const PolymorphismVisitor& visit) {
  if (arity == 0) throw input_error("arity must be >= 1");
  if (options.workers == 0) throw input_error("workers must be >= 1");
  const Signature& sig = p.signature();
  const std::size_t m = sig.arity();

  std::vector<std::size_t> table_len(m);
  for (std::size_t i = 0; i < m; ++i)
    table_len[i] = checked_table_size(sig.size(i), arity);

  const Matrices mx = build_matrices(p, arity, table_len[m - 1]);
  const auto pins = evaluate_pins(sig, table_len, options);

  std::atomic<std::uint64_t> assignments{0};

  if (options.workers == 1) {
    Engine engine(p, mx, table_len, pins, assignments, options.budget);
    engine.sink = &visit;
    engine.fill(0, 0, arity);
    return;
  }

  // Parallel mode: split on the first few entries of coordinate 0, run each
  // prefix as an independent task, buffer results, and replay them in task
  // order, which equals canonical order.
  std::size_t depth = 0;
  std::uint64_t combos = 1;
  while (depth < table_len[0] && combos < std::uint64_t{8} * options.workers) {
    combos *= pins[0][depth] >= 0 ? 1 : sig.size(0);
    ++depth;
  }
  std::vector<std::vector<Value>> prefixes;
  {
    std::vector<Value> cur(depth, 0);
    for (std::size_t e = 0; e < depth; ++e)
      if (pins[0][e] >= 0) cur[e] = static_cast<Value>(pins[0][e]);
    while (true) {
      prefixes.push_back(cur);
      std::size_t pos = depth;
      while (pos > 0) {
        std::size_t e = pos - 1;
        if (pins[0][e] < 0 && static_cast<std::size_t>(cur[e]) + 1 < sig.size(0)) {
          ++cur[e];
          break;
        }
        cur[e] = pins[0][e] >= 0 ? static_cast<Value>(pins[0][e]) : Value{0};
        --pos;
      }
      if (pos == 0) break;
    }
  }

  std::vector<std::vector<PolymorphismTuple>> results(prefixes.size());
  std::atomic<std::size_t> next_task{0};
  std::atomic<bool> cancel{false};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  auto worker = [&]() {
    while (true) {
      const std::size_t task = next_task.fetch_add(1);
      if (task >= prefixes.size() || cancel.load()) return;
      auto task_pins = pins;
      for (std::size_t e = 0; e < depth; ++e)
        task_pins[0][e] = static_cast<std::int16_t>(prefixes[task][e]);
      std::vector<PolymorphismTuple>& out = results[task];
      PolymorphismVisitor buffer = [&out](const PolymorphismTuple& fs) {
        out.push_back(fs);
        return true;
      };
      try {
        Engine engine(p, mx, table_len, std::move(task_pins), assignments,
                      options.budget);
        engine.sink = &buffer;
        engine.cancel = &cancel;
        engine.fill(0, 0, arity);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        cancel.store(true);
        return;
      }
    }
  };

  std::vector<std::thread> threads;
  const unsigned thread_count =
      static_cast<unsigned>(std::min<std::size_t>(options.workers, prefixes.size()));
  threads.reserve(thread_count);
  for (unsigned t = 0; t < thread_count; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);

  for (const auto& chunk : results)
    for (const PolymorphismTuple& fs : chunk)
      if (!visit(fs)) return;
}

std::vector<PolymorphismTuple> collect_polymorphisms(const Predicate& p,
                                                     std::size_t arity,
                                                     const EnumerationOptions& options) {
  std::vector<PolymorphismTuple> out;
  enumerate_polymorphisms(p, arity, options, [&out](const PolymorphismTuple& fs) {
    out.push_back(fs);
    return true;
  });
  return out;
}

std::uint64_t count_polymorphisms(const Predicate& p, std::size_t arity,
                                  const EnumerationOptions& options) {
  std::uint64_t count = 0;
  enumerate_polymorphisms(p, arity, options, [&count](const PolymorphismTuple&) {
    ++count;
    return true;
  });
  return count;
}

PolymorphismClassifier::PolymorphismClassifier(const Predicate& p)
    : p_(p), minimal_(minimal_certificates(p)) {}

TypeVerdict PolymorphismClassifier::classify(const PhiFamily& phi,
                                             const PolymorphismTuple& fs) const {
  require_matches(p_.signature(), fs);
  if (!(phi.signature() == p_.signature()))
    throw input_error("pattern family signature does not match predicate");
  const std::size_t m = p_.signature().arity();
  const std::size_t n = fs.arity();
  TypeVerdict verdict;

  for (std::size_t j = 0; j < n; ++j) {
    std::vector<FunctionTable> phis;
    phis.reserve(m);
    bool factors = true;
    for (std::size_t i = 0; i < m && factors; ++i) {
      if (auto f = factor_through_argument(fs.components[i], j))
        phis.push_back(std::move(*f));
      else
        factors = false;
    }
    if (factors && phi.contains(phis))
      verdict.dictatorial.push_back({j, std::move(phis)});
  }

  std::vector<std::optional<Value>> constants(m);
  for (std::size_t i = 0; i < m; ++i)
    constants[i] = fs.components[i].constant_value();
  for (const Certificate& rho : minimal_) {
    bool conforms = true;
    for (const auto& [c, v] : rho.entries()) {
      if (!constants[c] || *constants[c] != v) {
        conforms = false;
        break;
      }
    }
    if (conforms) verdict.certificates.push_back(rho);
  }
  return verdict;
}

TypeVerdict classify_polymorphism(const Predicate& p, const PhiFamily& phi,
                                  const PolymorphismTuple& fs) {
  return PolymorphismClassifier(p).classify(phi, fs);
}

}  // namespace polytriv
