#include "polytriv/phi.hpp"

#include <algorithm>

namespace polytriv {

namespace {

constexpr std::uint64_t kMaxWalk = 10'000'000;

void require_all_binary(const Signature& sig, const char* what) {
  if (!sig.all_binary())
    throw input_error(std::string(what) + " is only defined for binary alphabets");
}

void validate_member(const Signature& sig, const std::vector<FunctionTable>& phis) {
  if (phis.size() != sig.arity())
    throw input_error("pattern tuple length does not match signature arity");
  for (std::size_t i = 0; i < phis.size(); ++i) {
    if (phis[i].arity() != 1)
      throw input_error("pattern components must be unary");
    if (phis[i].alphabet_size() != sig.size(i))
      throw input_error("pattern component alphabet does not match coordinate");
  }
}

bool is_identity(const FunctionTable& f) {
  return f == FunctionTable::identity(f.alphabet_size());
}

bool is_negation(const FunctionTable& f) { return f == FunctionTable::negation(); }

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a)
    throw capability_error("family size exceeds 64 bits");
  return a * b;
}

// All unary tables on {0,1} in canonical order: const0, id, neg, const1.
std::vector<FunctionTable> binary_unaries() {
  return {FunctionTable(2, 1, {0, 0}), FunctionTable::identity(2),
          FunctionTable::negation(), FunctionTable(2, 1, {1, 1})};
}

std::vector<FunctionTable> permutations_of(std::size_t k) {
  std::vector<Value> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = static_cast<Value>(i);
  std::vector<FunctionTable> out;
  do {
    out.emplace_back(k, 1, perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

PhiFamily PhiFamily::identity(Signature sig) {
  return PhiFamily(Kind::identity, std::move(sig));
}

PhiFamily PhiFamily::uniform_id_negation(Signature sig) {
  require_all_binary(sig, "the uniform id/negation family");
  return PhiFamily(Kind::uniform_id_negation, std::move(sig));
}

PhiFamily PhiFamily::all_id_negation(Signature sig) {
  require_all_binary(sig, "the id/negation family");
  return PhiFamily(Kind::all_id_negation, std::move(sig));
}

PhiFamily PhiFamily::all_const_id_negation(Signature sig) {
  require_all_binary(sig, "the constants/id/negation family");
  return PhiFamily(Kind::all_const_id_negation, std::move(sig));
}

PhiFamily PhiFamily::all_permutations(Signature sig) {
  return PhiFamily(Kind::all_permutations, std::move(sig));
}

PhiFamily PhiFamily::custom(Signature sig,
                            std::vector<std::vector<FunctionTable>> members) {
  if (members.empty()) throw input_error("a pattern family needs at least one member");
  for (const auto& phis : members) validate_member(sig, phis);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  PhiFamily family(Kind::custom, std::move(sig));
  family.members_ = std::move(members);
  return family;
}

bool PhiFamily::contains(const std::vector<FunctionTable>& phis) const {
  validate_member(sig_, phis);
  switch (kind_) {
    case Kind::identity:
      return std::all_of(phis.begin(), phis.end(), is_identity);
    case Kind::uniform_id_negation:
      return std::all_of(phis.begin(), phis.end(), is_identity) ||
             std::all_of(phis.begin(), phis.end(), is_negation);
    case Kind::all_id_negation:
      return std::all_of(phis.begin(), phis.end(), [](const FunctionTable& f) {
        return is_identity(f) || is_negation(f);
      });
    case Kind::all_const_id_negation:
      return true;  // every unary table on {0,1} is const0, const1, id, or neg
    case Kind::all_permutations:
      return std::all_of(phis.begin(), phis.end(),
                         [](const FunctionTable& f) { return f.is_permutation(); });
    case Kind::custom:
      return std::binary_search(members_.begin(), members_.end(), phis);
  }
  return false;
}

bool PhiFamily::permutations_only() const {
  switch (kind_) {
    case Kind::identity:
    case Kind::uniform_id_negation:
    case Kind::all_id_negation:
    case Kind::all_permutations:
      return true;
    case Kind::all_const_id_negation:
      return false;
    case Kind::custom:
      for (const auto& phis : members_)
        for (const auto& f : phis)
          if (!f.is_permutation()) return false;
      return true;
  }
  return false;
}

std::uint64_t PhiFamily::member_count() const {
  const std::size_t m = sig_.arity();
  switch (kind_) {
    case Kind::identity:
      return 1;
    case Kind::uniform_id_negation:
      return 2;
    case Kind::all_id_negation: {
      std::uint64_t c = 1;
      for (std::size_t i = 0; i < m; ++i) c = checked_mul(c, 2);
      return c;
    }
    case Kind::all_const_id_negation: {
      std::uint64_t c = 1;
      for (std::size_t i = 0; i < m; ++i) c = checked_mul(c, 4);
      return c;
    }
    case Kind::all_permutations: {
      std::uint64_t c = 1;
      for (std::size_t i = 0; i < m; ++i) c = checked_mul(c, factorial(sig_.size(i)));
      return c;
    }
    case Kind::custom:
      return members_.size();
  }
  return 0;
}

void PhiFamily::for_each_member(
    const std::function<bool(const std::vector<FunctionTable>&)>& visit) const {
  const std::size_t m = sig_.arity();
  if (member_count() > kMaxWalk)
    throw capability_error("family too large to enumerate");

  if (kind_ == Kind::custom) {
    for (const auto& phis : members_)
      if (!visit(phis)) return;
    return;
  }
  if (kind_ == Kind::identity || kind_ == Kind::uniform_id_negation) {
    std::vector<FunctionTable> ids, negs;
    for (std::size_t i = 0; i < m; ++i) {
      ids.push_back(FunctionTable::identity(sig_.size(i)));
      if (kind_ == Kind::uniform_id_negation) negs.push_back(FunctionTable::negation());
    }
    if (!visit(ids)) return;
    if (kind_ == Kind::uniform_id_negation) visit(negs);
    return;
  }

  // Product families: per-coordinate candidate lists in canonical order,
  // coordinate 0 most significant.
  std::vector<std::vector<FunctionTable>> candidates(m);
  for (std::size_t i = 0; i < m; ++i) {
    switch (kind_) {
      case Kind::all_id_negation:
        candidates[i] = {FunctionTable::identity(2), FunctionTable::negation()};
        break;
      case Kind::all_const_id_negation:
        candidates[i] = binary_unaries();
        break;
      case Kind::all_permutations:
        candidates[i] = permutations_of(sig_.size(i));
        break;
      default:
        break;
    }
  }
  std::vector<std::size_t> pick(m, 0);
  std::vector<FunctionTable> phis;
  while (true) {
    phis.clear();
    for (std::size_t i = 0; i < m; ++i) phis.push_back(candidates[i][pick[i]]);
    if (!visit(phis)) return;
    std::size_t pos = m;
    while (pos > 0) {
      if (++pick[pos - 1] < candidates[pos - 1].size()) break;
      pick[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) return;
  }
}

std::string PhiFamily::name() const {
  switch (kind_) {
    case Kind::identity:
      return "id";
    case Kind::all_id_negation:
      return "neg";
    case Kind::uniform_id_negation:
      return "idneg-uniform";
    case Kind::all_const_id_negation:
      return "const-id-neg";
    case Kind::all_permutations:
      return "all-permutations";
    case Kind::custom:
      return "custom";
  }
  return "unknown";
}

}  // namespace polytriv
