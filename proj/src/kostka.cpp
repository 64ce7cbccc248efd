#include "kostka/kostka.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

namespace kostka {

std::optional<KostkaValue> KostkaCache::lookup(const SchubertProblem& p) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = map_.find(p);
  if (it == map_.end()) {
    misses_.fetch_add(1, std::memory_order_relaxed);
    return std::nullopt;
  }
  hits_.fetch_add(1, std::memory_order_relaxed);
  return it->second;
}

void KostkaCache::insert(const SchubertProblem& p, const KostkaValue& value) {
  std::lock_guard<std::mutex> lock(mutex_);
  map_.emplace(p, value);
}

std::size_t KostkaCache::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return map_.size();
}

void KostkaCache::save(std::ostream& out) const {
  std::lock_guard<std::mutex> lock(mutex_);
  std::vector<const SchubertProblem*> keys;
  keys.reserve(map_.size());
  for (const auto& [p, v] : map_) keys.push_back(&p);
  std::sort(keys.begin(), keys.end(),
            [](const SchubertProblem* a, const SchubertProblem* b) { return *a < *b; });
  for (const SchubertProblem* p : keys) {
    if (p->is_empty()) continue;
    out << p->to_string() << '\t' << map_.at(*p).str() << '\n';
  }
}

void KostkaCache::load(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    SchubertProblem p = SchubertProblem::parse(line.substr(0, tab));
    KostkaValue v(line.substr(tab + 1));
    std::lock_guard<std::mutex> lock(mutex_);
    map_.emplace(std::move(p), std::move(v));
  }
}

KostkaValue kostka_m4(const SchubertProblem& p) {
  if (p.m() != 4) {
    throw std::invalid_argument("kostka_m4 requires exactly four parts, got " +
                                std::to_string(p.m()));
  }
  if (!is_valid(p)) {
    throw std::invalid_argument("kostka_m4 requires a valid problem");
  }
  long long n = n_of(p);
  long long best = p.parts()[3];              // minimal part
  best = std::min(best, n - 1 - p.parts()[0]);  // smallest complement
  return KostkaValue(1 + best);
}

namespace {

KostkaValue factorial(int n) {
  KostkaValue f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

KostkaValue kostka_hook(int mu, int b) {
  if (mu < 0 || b < 0) throw std::invalid_argument("kostka_hook: negative argument");
  if ((mu + b) % 2 != 0) {
    throw std::invalid_argument("kostka_hook: mu + b must be even");
  }
  if (b > mu) {
    throw std::invalid_argument("kostka_hook: (1^mu, b) is invalid for b > mu");
  }
  int c = (mu + b) / 2;
  return factorial(mu) * (b + 1) / (factorial(c - b) * factorial(c + 1));
}

std::pair<KostkaValue, KostkaValue> kostka_m5_family(int a) {
  if (a < 2 || a % 2 != 0) {
    throw std::invalid_argument("kostka_m5_family: a must be even and >= 2");
  }
  KostkaValue b = a / 2;
  return {1 + b, (5 * b * b + 3 * b) / 2};
}

std::pair<SchubertProblem, SchubertProblem> schubert_split(const SchubertProblem& p, int i,
                                                           int j) {
  if (i == j || i < 0 || j < 0 || i >= p.m() || j >= p.m()) {
    throw std::out_of_range("schubert_split: bad index pair");
  }
  std::vector<int> merged, lowered;
  merged.reserve(p.parts().size());
  lowered.reserve(p.parts().size() + 1);
  for (int k = 0; k < p.m(); ++k) {
    if (k == i || k == j) continue;
    merged.push_back(p[k]);
    lowered.push_back(p[k]);
  }
  merged.push_back(p[i] + p[j]);
  if (p[i] > 1) lowered.push_back(p[i] - 1);
  if (p[j] > 1) lowered.push_back(p[j] - 1);
  return {SchubertProblem(std::move(merged)), SchubertProblem(std::move(lowered))};
}

namespace {

// is p of shape (b, 1, 1, ..., 1) (canonical descending)?
bool hook_shaped(const SchubertProblem& p, int& mu, int& b) {
  const auto& parts = p.parts();
  if (parts.empty()) return false;
  for (std::size_t k = 1; k < parts.size(); ++k) {
    if (parts[k] != 1) return false;
  }
  if (parts[0] == 1) {
    mu = p.m();
    b = 0;
  } else {
    mu = p.m() - 1;
    b = parts[0];
  }
  return b <= mu;
}

// (a, a, a, 2a) or (a, a, a, a-1, a-1) with a even
bool m5_shaped(const SchubertProblem& p, int& a, bool& is_merge_form) {
  const auto& q = p.parts();
  if (q.size() == 4 && q[1] == q[2] && q[2] == q[3] && q[0] == 2 * q[1] && q[1] % 2 == 0) {
    a = q[1];
    is_merge_form = true;
    return true;
  }
  if (q.size() == 5 && q[0] == q[1] && q[1] == q[2] && q[3] == q[4] && q[3] == q[0] - 1 &&
      q[0] % 2 == 0) {
    a = q[0];
    is_merge_form = false;
    return true;
  }
  return false;
}

KostkaValue compute(const SchubertProblem& p, KostkaCache& cache, Method* method,
                    bool* reduced_first);

KostkaValue dispatch_reduced(const SchubertProblem& p, KostkaCache& cache, Method* method) {
  if (p.is_empty()) {
    if (method) *method = Method::Empty;
    return 1;
  }
  if (p.m() <= 3) {  // m = 1 is invalid and never reaches here
    if (method) *method = Method::SmallM;
    return 1;
  }
  int a = 0, mu = 0, b = 0;
  bool merge_form = false;
  if (p.m() == 4) {
    if (method) *method = Method::ClosedM4;
    return kostka_m4(p);
  }
  if (hook_shaped(p, mu, b)) {
    if (method) *method = Method::Hook;
    return kostka_hook(mu, b);
  }
  if (m5_shaped(p, a, merge_form)) {
    if (method) *method = Method::M5Family;
    auto [k_merge, k_pair] = kostka_m5_family(a);
    return merge_form ? k_merge : k_pair;
  }
  if (method) *method = Method::Recursion;
  auto [child1, child2] = schubert_split(p, p.m() - 2, p.m() - 1);
  return compute(child1, cache, nullptr, nullptr) + compute(child2, cache, nullptr, nullptr);
}

KostkaValue compute(const SchubertProblem& p, KostkaCache& cache, Method* method,
                    bool* reduced_first) {
  if (!is_valid(p)) {
    if (method) *method = Method::Invalid;
    return 0;
  }
  if (auto hit = cache.lookup(p)) {
    if (method == nullptr) return *hit;
    // fall through so the method tag is still reported correctly
  }
  SchubertProblem r = is_reduced(p) ? p : reduce_fast(p);
  if (reduced_first) *reduced_first = !(r == p);
  KostkaValue value = dispatch_reduced(r, cache, method);
  cache.insert(p, value);
  return value;
}

}  // namespace

KostkaValue kostka_number(const SchubertProblem& p, KostkaCache& cache) {
  return compute(p, cache, nullptr, nullptr);
}

KostkaResult kostka_number_with_method(const SchubertProblem& p, KostkaCache& cache) {
  KostkaResult r{0, Method::Invalid, false};
  r.value = compute(p, cache, &r.method, &r.reduced_first);
  return r;
}

std::string method_label(const KostkaResult& r) {
  std::string base;
  switch (r.method) {
    case Method::Invalid: return "invalid";
    case Method::Empty: base = "empty"; break;
    case Method::SmallM: base = "closed-form m<=3"; break;
    case Method::ClosedM4: base = "closed-form m=4"; break;
    case Method::Hook: base = "closed-form hook"; break;
    case Method::M5Family: base = "closed-form m=5"; break;
    case Method::Recursion: base = "recursion"; break;
  }
  return r.reduced_first ? "reduction→" + base : base;
}

}  // namespace kostka
