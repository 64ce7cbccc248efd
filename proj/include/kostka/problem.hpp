#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace kostka {

struct OddSumError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NonpositivePartError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A Schubert problem of lines: condition codimensions a_1 >= ... >= a_m >= 1
/// with even sum, kept in canonical (descending) order.  The count of
/// solution lines is symmetric in the a_i, so one representative per multiset
/// is enough and every cache and serialization keys on this form.
///
/// Invalid problems (some a_i > n-1) are representable rather than rejected:
/// the degeneration recursion produces them and assigns them count zero.
/// Values are immutable after construction.
class SchubertProblem {
 public:
  SchubertProblem() = default;  // the empty problem

  /// Canonicalizes.  Throws NonpositivePartError / OddSumError.
  explicit SchubertProblem(std::vector<int> raw);

  const std::vector<int>& parts() const { return parts_; }
  int m() const { return static_cast<int>(parts_.size()); }
  long long sum() const { return sum_; }
  bool is_empty() const { return parts_.empty(); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

  bool operator==(const SchubertProblem&) const = default;
  bool operator<(const SchubertProblem& o) const { return parts_ < o.parts_; }

  /// Textual form "a1,a2,...,am" (empty string for the empty problem).
  std::string to_string() const;
  static SchubertProblem parse(const std::string& text);

 private:
  std::vector<int> parts_;
  long long sum_ = 0;
};

/// n(a_1,...,a_m) = (a_1 + ... + a_m + 2)/2; ambient dimension parameter.
/// The empty problem gets n = 1.
long long n_of(const SchubertProblem& p);

/// Valid iff every a_i <= n-1, i.e. the parts are sides of a (possibly
/// degenerate) polygon.  Valid problems are exactly those with solutions.
bool is_valid(const SchubertProblem& p);

/// Reduced iff a_i + a_j < n for every pair; vacuous for m <= 1.
bool is_reduced(const SchubertProblem& p);

struct ReductionStep {
  int i, j;                // indices into the pre-step canonical parts
  SchubertProblem after;   // problem after decrementing parts i and j
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  SchubertProblem final;   // reduced or empty
};

/// While the two largest parts satisfy a_1 + a_2 >= n, replace them by
/// a_1 - 1, a_2 - 1, dropping parts that reach zero.  The count is preserved
/// at every step.  Requires a valid problem.
ReductionTrace reduce(const SchubertProblem& p);

/// Same loop without the trace; used by the counting engines.
SchubertProblem reduce_fast(const SchubertProblem& p);

struct ProblemHash {
  std::size_t operator()(const SchubertProblem& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.parts()) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace kostka
