#pragma once

#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>

#include "kostka/problem.hpp"
#include "kostka/types.hpp"

namespace kostka {

/// Memo table keyed on canonical problems.  Entries are immutable once
/// written; concurrent lookups and idempotent concurrent inserts are allowed
/// (a racing insert writes the same value).
class KostkaCache {
 public:
  std::optional<KostkaValue> lookup(const SchubertProblem& p) const;
  void insert(const SchubertProblem& p, const KostkaValue& value);

  std::uint64_t hits() const { return hits_.load(std::memory_order_relaxed); }
  std::uint64_t misses() const { return misses_.load(std::memory_order_relaxed); }
  std::size_t size() const;

  // line format "a1,a2,...,am<TAB>value"; the empty problem is not persisted
  void save(std::ostream& out) const;
  void load(std::istream& in);

 private:
  mutable std::mutex mutex_;
  std::unordered_map<SchubertProblem, KostkaValue, ProblemHash> map_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
};

enum class Method {
  Invalid,    // K = 0
  Empty,      // empty problem, K = 1 by convention
  SmallM,     // m <= 3, K = 1
  ClosedM4,   // 1 + min{a_i, n-1-a_j}
  Hook,       // (1^mu, b) via the hook-length formula
  M5Family,   // (a^3, 2a) / (a^3, (a-1)^2) closed forms
  Recursion,  // degeneration split of the two smallest parts
};

struct KostkaResult {
  KostkaValue value;
  Method method;        // what decided the value at the root (after reduction)
  bool reduced_first;   // a nontrivial reduction ran before the dispatch
};

std::string method_label(const KostkaResult& r);

/// K(p): 0 for invalid problems, 1 for the empty problem, closed forms where
/// they apply, otherwise Schubert's split of the two smallest parts
///   K(...,x,y) = K(...,x+y) + K(...,x-1,y-1)
/// with memoization on canonical form.  Reduction runs first at every level.
KostkaValue kostka_number(const SchubertProblem& p, KostkaCache& cache);
KostkaResult kostka_number_with_method(const SchubertProblem& p, KostkaCache& cache);

/// m = 4 closed form: 1 + min over parts a_i and complements n-1-a_j.
/// Requires m == 4 and a valid problem.
KostkaValue kostka_m4(const SchubertProblem& p);

/// K(1^mu, b) = mu!(b+1)/((c-b)!(c+1)!) with mu+b = 2c; b = 0 means (1^mu).
/// Requires mu+b even and b <= mu (validity).
KostkaValue kostka_hook(int mu, int b);

/// For even a = 2b >= 2: (K(a^3, 2a), K(a^3, (a-1)^2)) = (1+b, (5b^2+3b)/2).
std::pair<KostkaValue, KostkaValue> kostka_m5_family(int a);

/// Degeneration children for the pair (i, j): the first merges a_i and a_j
/// (possibly invalid, count zero), the second decrements both, dropping
/// zeros.  K(p) = K(first) + K(second).
std::pair<SchubertProblem, SchubertProblem> schubert_split(const SchubertProblem& p, int i, int j);

}  // namespace kostka
