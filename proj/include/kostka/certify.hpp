#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "kostka/kostka.hpp"
#include "kostka/problem.hpp"
#include "kostka/types.hpp"

namespace kostka {

struct NoPairFoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CertificateBudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CertificateFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class NodeKind : std::uint8_t { Leaf, Reduction, Degeneration };
enum class LeafTag : std::uint8_t { None, MLe3, FourLines, TrivialCount };

std::string to_string(NodeKind k);
std::string to_string(LeafTag t);

/// Append-only intern table for canonical problems; ids stay stable.
class ProblemPool {
 public:
  std::uint32_t intern(const SchubertProblem& p);
  const SchubertProblem& at(std::uint32_t id) const { return items_[id]; }
  std::size_t size() const { return items_.size(); }

 private:
  std::deque<SchubertProblem> items_;
  std::unordered_map<SchubertProblem, std::uint32_t, ProblemHash> index_;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 64'000'000;

/// One arithmetic step of the induction behind the at-least-alternating
/// certificates: a reduction edge, a degeneration split with its two audited
/// counts, or a base leaf.  Nodes live in a flat arena; the root is node 0.
class Certificate {
 public:
  static constexpr std::uint32_t kNoChild = 0xffffffffu;

  struct Node {
    NodeKind kind = NodeKind::Leaf;
    LeafTag tag = LeafTag::None;
    std::uint16_t pair_i = 0, pair_j = 0;  // Degeneration split indices
    std::uint32_t problem = 0;             // pool id
    std::uint32_t child1 = kNoChild;       // Reduction child / merged child
    std::uint32_t child2 = kNoChild;       // decremented child
    std::int64_t kostka = 0;
  };

  const Node& root() const { return nodes_.front(); }
  const Node& node(std::uint32_t idx) const { return nodes_[idx]; }
  Node& mutable_node(std::uint32_t idx) { return nodes_[idx]; }  // audits and tamper tests
  std::size_t size() const { return nodes_.size(); }
  const SchubertProblem& problem_of(const Node& n) const { return pool_->at(n.problem); }
  const SchubertProblem& problem_of_id(std::uint32_t id) const { return pool_->at(id); }
  KostkaValue kostka_of(const Node& n) const { return KostkaValue(n.kostka); }

  nlohmann::json to_json() const;
  static Certificate from_json(const nlohmann::json& j,
                               std::uint64_t node_budget = kDefaultNodeBudget);

 private:
  std::vector<Node> nodes_;
  std::shared_ptr<ProblemPool> pool_;
  friend class Certifier;
};

struct PairChoice {
  int i = 0, j = 0;
  KostkaValue k1, k2;
};

/// A split pair (i, j) of the reduced problem p with K(child1) != K(child2),
/// both nonzero.  Deterministic search: the (min part, max part) pair
/// (m-1, 0) first -- the unequal-entries route -- then lexicographic.
/// Requires p reduced, valid, m >= 4, p != (1,1,1,1); throws NoPairFoundError
/// if the scan is exhausted (the induction lemma says it never is).
PairChoice find_rearrangement(const SchubertProblem& p, KostkaCache& cache);

/// Builds certificate trees.  Reusable: per-problem decisions (counts, pair
/// choices, reductions) are interned and shared across calls, which is what
/// makes whole-census sweeps cheap.
class Certifier {
 public:
  explicit Certifier(std::uint64_t node_budget = kDefaultNodeBudget);
  ~Certifier();
  Certifier(const Certifier&) = delete;
  Certifier& operator=(const Certifier&) = delete;

  /// Root-first tree mirroring the double induction: reduce, then leaf
  /// (m <= 3 or the four-lines problem), else degenerate along the chosen
  /// pair and certify both children from scratch.  Requires p valid.
  Certificate certify(const SchubertProblem& p);

  /// Same, reusing out's node storage (for sweeps).
  void certify_into(const SchubertProblem& p, Certificate& out);

  KostkaCache& cache() { return cache_; }

 private:
  struct Record;
  std::uint32_t ensure_record(std::uint32_t id);
  std::uint32_t build(std::uint32_t id, std::vector<Certificate::Node>& nodes);

  std::uint64_t node_budget_;
  std::shared_ptr<ProblemPool> pool_;
  std::vector<Record> records_;
  KostkaCache cache_;
};

/// One-shot convenience.
Certificate certify(const SchubertProblem& p, std::uint64_t node_budget = kDefaultNodeBudget);

enum class VerifyMode { Recursion, Enumeration };

struct VerifyFailure {
  std::uint32_t node = 0;
  std::string problem;
  std::string reason;
};

struct VerifyReport {
  bool ok = false;
  std::uint64_t nodes_checked = 0;
  std::vector<VerifyFailure> failures;  // first few, in walk order
};

/// Independent audit: re-derives every node's count with a fresh cache
/// (recursion mode) or by tableau enumeration (for nodes with sum <=
/// enum_sum_cap), and checks every structural invariant: reduction edges
/// match reduce(), degeneration children match the recorded split,
/// K1 + K2 = K, and each split satisfies (K1 != K2, both > 0) or
/// K1 = K2 = 1.
VerifyReport verify_certificate(const Certificate& cert, VerifyMode mode = VerifyMode::Recursion,
                                long long enum_sum_cap = 20);

}  // namespace kostka
