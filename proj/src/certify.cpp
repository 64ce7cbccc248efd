#include "kostka/certify.hpp"

#include <algorithm>
#include <limits>

#include "kostka/tableaux.hpp"

namespace kostka {

std::string to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Leaf: return "Leaf";
    case NodeKind::Reduction: return "Reduction";
    case NodeKind::Degeneration: return "Degeneration";
  }
  return "?";
}

std::string to_string(LeafTag t) {
  switch (t) {
    case LeafTag::None: return "";
    case LeafTag::MLe3: return "mLE3";
    case LeafTag::FourLines: return "fourLines";
    case LeafTag::TrivialCount: return "trivialCount";
  }
  return "?";
}

std::uint32_t ProblemPool::intern(const SchubertProblem& p) {
  auto it = index_.find(p);
  if (it != index_.end()) return it->second;
  auto id = static_cast<std::uint32_t>(items_.size());
  items_.push_back(p);
  index_.emplace(items_.back(), id);
  return id;
}

namespace {

const SchubertProblem kFourLines(std::vector<int>{1, 1, 1, 1});

// Deterministic pair scan shared by find_rearrangement and the certifier:
// the priority candidate (0, m-1) splits a maximal with a minimal part, then
// all pairs in lexicographic order.
template <class KostkaOf>
bool scan_pairs(const SchubertProblem& p, KostkaOf&& kostka_of, int& out_i, int& out_j) {
  const int m = p.m();
  auto try_pair = [&](int i, int j) {
    auto [c1, c2] = schubert_split(p, i, j);
    auto k1 = kostka_of(c1);
    auto k2 = kostka_of(c2);
    if (k1 != k2 && k1 > 0 && k2 > 0) {
      out_i = i;
      out_j = j;
      return true;
    }
    return false;
  };
  if (try_pair(0, m - 1)) return true;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (i == 0 && j == m - 1) continue;
      if (try_pair(i, j)) return true;
    }
  }
  return false;
}

void check_rearrangement_pre(const SchubertProblem& p) {
  if (!is_valid(p) || !is_reduced(p) || p.m() < 4 || p == kFourLines) {
    throw std::invalid_argument(
        "find_rearrangement requires a reduced valid problem with m >= 4, not (1,1,1,1); got (" +
        p.to_string() + ")");
  }
}

}  // namespace

PairChoice find_rearrangement(const SchubertProblem& p, KostkaCache& cache) {
  check_rearrangement_pre(p);
  int i = 0, j = 0;
  bool found = scan_pairs(
      p, [&cache](const SchubertProblem& q) { return kostka_number(q, cache); }, i, j);
  if (!found) {
    throw NoPairFoundError("no unequal split pair for (" + p.to_string() + ")");
  }
  auto [c1, c2] = schubert_split(p, i, j);
  return PairChoice{i, j, kostka_number(c1, cache), kostka_number(c2, cache)};
}

struct Certifier::Record {
  std::int64_t kostka = -1;
  std::uint32_t reduced_id = Certificate::kNoChild;  // set when not reduced
  std::uint32_t child1 = Certificate::kNoChild;      // Degeneration children
  std::uint32_t child2 = Certificate::kNoChild;
  NodeKind kind = NodeKind::Leaf;
  LeafTag tag = LeafTag::None;
  std::uint16_t pair_i = 0, pair_j = 0;
  bool ready = false;
};

Certifier::Certifier(std::uint64_t node_budget)
    : node_budget_(node_budget), pool_(std::make_shared<ProblemPool>()) {}

Certifier::~Certifier() = default;

std::uint32_t Certifier::ensure_record(std::uint32_t id) {
  if (id < records_.size() && records_[id].ready) return id;
  if (records_.size() <= id) records_.resize(pool_->size());
  Record rec;
  const SchubertProblem& p = pool_->at(id);
  KostkaValue k = kostka_number(p, cache_);
  if (k > std::numeric_limits<std::int64_t>::max()) {
    throw CertificateBudgetError("count of (" + p.to_string() +
                                 ") exceeds the certifiable range");
  }
  rec.kostka = static_cast<std::int64_t>(k);
  if (!is_reduced(p)) {
    rec.kind = NodeKind::Reduction;
    std::uint32_t rid = pool_->intern(reduce_fast(p));
    rec.reduced_id = rid;
  } else if (p == kFourLines) {
    rec.kind = NodeKind::Leaf;
    rec.tag = LeafTag::FourLines;
  } else if (p.m() <= 3) {
    rec.kind = NodeKind::Leaf;
    rec.tag = LeafTag::MLe3;
  } else if (rec.kostka == 1) {
    // cannot arise for reduced m >= 4 (the split below would force K >= 2);
    // kept so foreign inputs re-certify cleanly
    rec.kind = NodeKind::Leaf;
    rec.tag = LeafTag::TrivialCount;
  } else {
    rec.kind = NodeKind::Degeneration;
    int i = 0, j = 0;
    bool found = scan_pairs(
        p,
        [this](const SchubertProblem& q) { return kostka_number(q, cache_); }, i, j);
    if (!found) throw NoPairFoundError("no unequal split pair for (" + p.to_string() + ")");
    auto [c1, c2] = schubert_split(p, i, j);
    if (!is_valid(c1)) {
      // reduced parents always give valid merged children
      throw std::logic_error("merged child of reduced (" + p.to_string() + ") is invalid");
    }
    rec.pair_i = static_cast<std::uint16_t>(i);
    rec.pair_j = static_cast<std::uint16_t>(j);
    rec.child1 = pool_->intern(c1);
    rec.child2 = pool_->intern(c2);
  }
  if (records_.size() < pool_->size()) records_.resize(pool_->size());
  rec.ready = true;
  records_[id] = rec;
  return id;
}

std::uint32_t Certifier::build(std::uint32_t id, std::vector<Certificate::Node>& nodes) {
  ensure_record(id);
  const Record rec = records_[id];  // by value: recursion below grows records_
  if (nodes.size() >= node_budget_) {
    throw CertificateBudgetError("certificate exceeds the node budget of " +
                                 std::to_string(node_budget_));
  }
  auto idx = static_cast<std::uint32_t>(nodes.size());
  nodes.emplace_back();
  {
    Certificate::Node& n = nodes[idx];
    n.kind = rec.kind;
    n.tag = rec.tag;
    n.problem = id;
    n.kostka = rec.kostka;
    n.pair_i = rec.pair_i;
    n.pair_j = rec.pair_j;
  }
  // children after the header; the vector may reallocate, so re-index
  if (rec.kind == NodeKind::Reduction) {
    std::uint32_t c = build(rec.reduced_id, nodes);
    nodes[idx].child1 = c;
  } else if (rec.kind == NodeKind::Degeneration) {
    std::uint32_t c1 = build(rec.child1, nodes);
    nodes[idx].child1 = c1;
    std::uint32_t c2 = build(rec.child2, nodes);
    nodes[idx].child2 = c2;
  }
  return idx;
}

void Certifier::certify_into(const SchubertProblem& p, Certificate& out) {
  if (!is_valid(p)) {
    throw std::invalid_argument("certify requires a valid problem, got (" + p.to_string() + ")");
  }
  out.pool_ = pool_;
  out.nodes_.clear();
  build(pool_->intern(p), out.nodes_);
}

Certificate Certifier::certify(const SchubertProblem& p) {
  Certificate cert;
  certify_into(p, cert);
  return cert;
}

Certificate certify(const SchubertProblem& p, std::uint64_t node_budget) {
  Certifier certifier(node_budget);
  return certifier.certify(p);
}

namespace {

nlohmann::json node_to_json(const Certificate& cert, const Certificate::Node& n) {
  nlohmann::json j;
  j["kind"] = to_string(n.kind);
  j["problem"] = cert.problem_of(n).parts();
  j["kostka"] = KostkaValue(n.kostka).str();
  switch (n.kind) {
    case NodeKind::Leaf:
      j["tag"] = to_string(n.tag);
      break;
    case NodeKind::Reduction: {
      nlohmann::json steps = nlohmann::json::array();
      for (const auto& s : reduce(cert.problem_of(n)).steps) {
        steps.push_back({{"pair", {s.i, s.j}}, {"after", s.after.parts()}});
      }
      j["steps"] = std::move(steps);
      j["children"] = nlohmann::json::array({node_to_json(cert, cert.node(n.child1))});
      break;
    }
    case NodeKind::Degeneration:
      j["pair"] = {n.pair_i, n.pair_j};
      j["children"] = nlohmann::json::array({node_to_json(cert, cert.node(n.child1)),
                                             node_to_json(cert, cert.node(n.child2))});
      break;
  }
  return j;
}

}  // namespace

nlohmann::json Certificate::to_json() const {
  nlohmann::json j;
  j["format"] = "kostka-certificate";
  j["version"] = 1;
  j["root"] = node_to_json(*this, root());
  return j;
}

namespace {

std::uint32_t node_from_json(const nlohmann::json& j, std::vector<Certificate::Node>& nodes,
                             ProblemPool& pool, std::uint64_t budget) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("problem") || !j.contains("kostka")) {
    throw CertificateFormatError("certificate node missing kind/problem/kostka");
  }
  if (nodes.size() >= budget) {
    throw CertificateFormatError("certificate exceeds the node budget");
  }
  Certificate::Node n;
  std::string kind = j.at("kind").get<std::string>();
  SchubertProblem problem(j.at("problem").get<std::vector<int>>());
  n.problem = pool.intern(problem);
  KostkaValue k(j.at("kostka").get<std::string>());
  if (k < 0 || k > std::numeric_limits<std::int64_t>::max()) {
    throw CertificateFormatError("kostka value out of certifiable range");
  }
  n.kostka = static_cast<std::int64_t>(k);

  auto idx = static_cast<std::uint32_t>(nodes.size());
  nodes.push_back(n);

  auto children = [&]() -> const nlohmann::json& {
    if (!j.contains("children") || !j.at("children").is_array()) {
      throw CertificateFormatError("node lacks a children array");
    }
    return j.at("children");
  };

  if (kind == "Leaf") {
    std::string tag = j.value("tag", "");
    if (tag == "mLE3") nodes[idx].tag = LeafTag::MLe3;
    else if (tag == "fourLines") nodes[idx].tag = LeafTag::FourLines;
    else if (tag == "trivialCount") nodes[idx].tag = LeafTag::TrivialCount;
    else throw CertificateFormatError("unknown leaf tag '" + tag + "'");
    nodes[idx].kind = NodeKind::Leaf;
  } else if (kind == "Reduction") {
    nodes[idx].kind = NodeKind::Reduction;
    ReductionTrace trace = reduce(problem);
    if (j.contains("steps")) {
      const auto& steps = j.at("steps");
      if (steps.size() != trace.steps.size()) {
        throw CertificateFormatError("reduction steps do not match reduce()");
      }
      for (std::size_t s = 0; s < trace.steps.size(); ++s) {
        auto after = steps[s].at("after").get<std::vector<int>>();
        if (SchubertProblem(after) != trace.steps[s].after) {
          throw CertificateFormatError("reduction step " + std::to_string(s) + " is wrong");
        }
      }
    }
    if (children().size() != 1) throw CertificateFormatError("Reduction needs one child");
    std::uint32_t c = node_from_json(children()[0], nodes, pool, budget);
    nodes[idx].child1 = c;
  } else if (kind == "Degeneration") {
    nodes[idx].kind = NodeKind::Degeneration;
    auto pair = j.at("pair").get<std::vector<int>>();
    if (pair.size() != 2) throw CertificateFormatError("pair must be [i, j]");
    nodes[idx].pair_i = static_cast<std::uint16_t>(pair[0]);
    nodes[idx].pair_j = static_cast<std::uint16_t>(pair[1]);
    if (children().size() != 2) throw CertificateFormatError("Degeneration needs two children");
    std::uint32_t c1 = node_from_json(children()[0], nodes, pool, budget);
    nodes[idx].child1 = c1;
    std::uint32_t c2 = node_from_json(children()[1], nodes, pool, budget);
    nodes[idx].child2 = c2;
  } else {
    throw CertificateFormatError("unknown node kind '" + kind + "'");
  }
  return idx;
}

}  // namespace

Certificate Certificate::from_json(const nlohmann::json& j, std::uint64_t node_budget) {
  if (!j.is_object() || j.value("format", "") != "kostka-certificate") {
    throw CertificateFormatError("not a kostka certificate");
  }
  Certificate cert;
  cert.pool_ = std::make_shared<ProblemPool>();
  node_from_json(j.at("root"), cert.nodes_, *cert.pool_, node_budget);
  return cert;
}

namespace {

struct Auditor {
  const Certificate& cert;
  VerifyMode mode;
  long long enum_sum_cap;
  KostkaCache fresh;
  std::unordered_map<std::uint32_t, KostkaValue> audited;
  std::unordered_map<std::uint32_t, SchubertProblem> reduced_memo;
  std::unordered_map<std::uint64_t, std::pair<SchubertProblem, SchubertProblem>> split_memo;
  VerifyReport report;

  const KostkaValue& audit(std::uint32_t problem_id) {
    auto it = audited.find(problem_id);
    if (it != audited.end()) return it->second;
    const SchubertProblem& p = cert.problem_of_id(problem_id);
    KostkaValue v = (mode == VerifyMode::Enumeration && p.sum() <= enum_sum_cap)
                        ? count_tableaux(p)
                        : kostka_number(p, fresh);
    return audited.emplace(problem_id, std::move(v)).first->second;
  }

  const SchubertProblem& reduced_of(std::uint32_t problem_id) {
    auto it = reduced_memo.find(problem_id);
    if (it != reduced_memo.end()) return it->second;
    return reduced_memo.emplace(problem_id, reduce_fast(cert.problem_of_id(problem_id)))
        .first->second;
  }

  const std::pair<SchubertProblem, SchubertProblem>& split_of(std::uint32_t problem_id, int i,
                                                              int j) {
    std::uint64_t key = (static_cast<std::uint64_t>(problem_id) << 32) |
                        (static_cast<std::uint64_t>(i) << 16) | static_cast<std::uint64_t>(j);
    auto it = split_memo.find(key);
    if (it != split_memo.end()) return it->second;
    return split_memo.emplace(key, schubert_split(cert.problem_of_id(problem_id), i, j))
        .first->second;
  }

  void fail(std::uint32_t idx, std::string reason) {
    report.ok = false;
    if (report.failures.size() < 8) {
      report.failures.push_back(
          {idx, cert.problem_of(cert.node(idx)).to_string(), std::move(reason)});
    }
  }

  void check(std::uint32_t idx) {
    const auto& n = cert.node(idx);
    ++report.nodes_checked;
    const SchubertProblem& p = cert.problem_of(n);
    if (KostkaValue(n.kostka) != audit(n.problem)) {
      fail(idx, "stored count " + std::to_string(n.kostka) + " != audited " +
                    audit(n.problem).str());
      return;
    }
    switch (n.kind) {
      case NodeKind::Leaf:
        if (n.child1 != Certificate::kNoChild || n.child2 != Certificate::kNoChild) {
          fail(idx, "leaf with children");
        } else if (n.tag == LeafTag::FourLines) {
          if (!(p == kFourLines) || n.kostka != 2) fail(idx, "fourLines leaf must be (1,1,1,1) with count 2");
        } else if (n.tag == LeafTag::MLe3) {
          if (p.m() > 3 || (n.kostka != 0 && n.kostka != 1)) fail(idx, "mLE3 leaf needs m <= 3 and count in {0,1}");
        } else if (n.tag == LeafTag::TrivialCount) {
          if (n.kostka != 1) fail(idx, "trivialCount leaf needs count 1");
        } else {
          fail(idx, "leaf without a tag");
        }
        break;
      case NodeKind::Reduction: {
        if (n.child1 == Certificate::kNoChild || n.child2 != Certificate::kNoChild) {
          fail(idx, "reduction needs exactly one child");
          break;
        }
        if (is_reduced(p)) {
          fail(idx, "reduction node on an already reduced problem");
          break;
        }
        const auto& c = cert.node(n.child1);
        if (!(cert.problem_of(c) == reduced_of(n.problem))) {
          fail(idx, "reduction child is not reduce(problem)");
        } else if (c.kostka != n.kostka) {
          fail(idx, "reduction must preserve the count");
        }
        break;
      }
      case NodeKind::Degeneration: {
        if (n.child1 == Certificate::kNoChild || n.child2 == Certificate::kNoChild) {
          fail(idx, "degeneration needs two children");
          break;
        }
        if (!is_reduced(p) || !is_valid(p) || p.m() < 4 || p == kFourLines) {
          fail(idx, "degeneration on a non-reduced/small problem");
          break;
        }
        int i = n.pair_i, j = n.pair_j;
        if (!(0 <= i && i < j && j < p.m())) {
          fail(idx, "bad split pair");
          break;
        }
        const auto& [c1, c2] = split_of(n.problem, i, j);
        const auto& n1 = cert.node(n.child1);
        const auto& n2 = cert.node(n.child2);
        if (!(cert.problem_of(n1) == c1) || !(cert.problem_of(n2) == c2)) {
          fail(idx, "children do not match the recorded split");
          break;
        }
        std::int64_t k1 = n1.kostka, k2 = n2.kostka;
        if (k1 + k2 != n.kostka) {
          fail(idx, "K1 + K2 != K");
          break;
        }
        bool vakil = (k1 != k2 && k1 > 0 && k2 > 0) || (k1 == 1 && k2 == 1);
        if (!vakil) fail(idx, "split violates the unequal-or-both-one condition");
        break;
      }
    }
  }
};

}  // namespace

VerifyReport verify_certificate(const Certificate& cert, VerifyMode mode,
                                long long enum_sum_cap) {
  Auditor a{cert, mode, enum_sum_cap, {}, {}, {}, {}, {}};
  a.report.ok = true;
  std::vector<std::uint32_t> stack{0};
  while (!stack.empty()) {
    std::uint32_t idx = stack.back();
    stack.pop_back();
    a.check(idx);
    const auto& n = cert.node(idx);
    if (n.child2 != Certificate::kNoChild) stack.push_back(n.child2);
    if (n.child1 != Certificate::kNoChild) stack.push_back(n.child1);
  }
  return a.report;
}

}  // namespace kostka
