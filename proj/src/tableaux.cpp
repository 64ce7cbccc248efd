#include "kostka/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kostka {

bool TwoRowTableau::well_formed() const {
  if (row1.size() != row2.size()) return false;
  for (std::size_t k = 0; k < row1.size(); ++k) {
    if (row1[k] >= row2[k]) return false;                      // columns strict
    if (k && (row1[k] < row1[k - 1] || row2[k] < row2[k - 1])) return false;
  }
  return true;
}

bool TwoRowTableau::has_content(const std::vector<int>& content) const {
  std::vector<long long> seen(content.size(), 0);
  for (const auto* row : {&row1, &row2}) {
    for (int v : *row) {
      if (v < 1 || v > static_cast<int>(content.size())) return false;
      ++seen[static_cast<std::size_t>(v - 1)];
    }
  }
  for (std::size_t i = 0; i < content.size(); ++i) {
    if (seen[i] != content[i]) return false;
  }
  return true;
}

std::string TwoRowTableau::ascii() const {
  int width = 1;
  for (const auto* row : {&row1, &row2}) {
    for (int v : *row) width = std::max(width, static_cast<int>(std::to_string(v).size()));
  }
  std::ostringstream out;
  for (const auto* row : {&row1, &row2}) {
    for (std::size_t k = 0; k < row->size(); ++k) {
      std::string s = std::to_string((*row)[k]);
      out << (k ? " " : "") << std::string(static_cast<std::size_t>(width) - s.size(), ' ') << s;
    }
    if (row == &row1) out << '\n';
  }
  return out.str();
}

namespace {

// Column-by-column DFS.  At column k we pick the two entries top-to-bottom,
// respecting row monotonicity against column k-1 and strict increase down the
// column, and prune when the copies of the largest remaining value no longer
// fit in the remaining cells of row two.
struct Enumerator {
  const std::vector<int>& content;
  std::uint64_t cap;
  std::vector<int> remaining;
  int columns = 0;
  std::uint64_t count = 0;
  std::vector<TwoRowTableau>* sink = nullptr;  // null for counting-only
  TwoRowTableau scratch;

  explicit Enumerator(const std::vector<int>& c, std::uint64_t cap_, bool materialize)
      : content(c), cap(cap_) {
    long long total = std::accumulate(c.begin(), c.end(), 0ll);
    if (total % 2 == 0) columns = static_cast<int>(total / 2);
    remaining.assign(c.begin(), c.end());
    if (materialize) {
      scratch.row1.assign(static_cast<std::size_t>(columns), 0);
      scratch.row2.assign(static_cast<std::size_t>(columns), 0);
    }
  }

  bool feasible(int cols_left) const {
    for (int v = static_cast<int>(remaining.size()); v-- > 0;) {
      if (remaining[static_cast<std::size_t>(v)] > 0) {
        return remaining[static_cast<std::size_t>(v)] <= cols_left;
      }
    }
    return true;
  }

  void dfs(int col, int prev1, int prev2) {
    if (col == columns) {
      if (++count > cap) {
        throw EnumerationCapError("tableau enumeration exceeded cap of " + std::to_string(cap));
      }
      if (sink) sink->push_back(scratch);
      return;
    }
    int m = static_cast<int>(content.size());
    for (int x = prev1; x <= m; ++x) {
      if (remaining[static_cast<std::size_t>(x - 1)] == 0) continue;
      --remaining[static_cast<std::size_t>(x - 1)];
      for (int y = std::max(x + 1, prev2); y <= m; ++y) {
        if (remaining[static_cast<std::size_t>(y - 1)] == 0) continue;
        --remaining[static_cast<std::size_t>(y - 1)];
        if (feasible(columns - col - 1)) {
          if (sink) {
            scratch.row1[static_cast<std::size_t>(col)] = x;
            scratch.row2[static_cast<std::size_t>(col)] = y;
          }
          dfs(col + 1, x, y);
        }
        ++remaining[static_cast<std::size_t>(y - 1)];
      }
      ++remaining[static_cast<std::size_t>(x - 1)];
    }
  }

  void run() {
    if (columns == 0) {
      long long total = std::accumulate(content.begin(), content.end(), 0ll);
      if (total == 0) {  // the empty tableau
        count = 1;
        if (sink) sink->push_back(TwoRowTableau{});
      }
      return;
    }
    dfs(0, 1, 1);
  }
};

}  // namespace

std::vector<TwoRowTableau> enumerate_tableaux_content(const std::vector<int>& content,
                                                      std::uint64_t cap) {
  for (int c : content) {
    if (c < 0) throw std::invalid_argument("negative content entry");
  }
  std::vector<TwoRowTableau> out;
  Enumerator e(content, cap, true);
  e.sink = &out;
  e.run();
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_tableaux_content(const std::vector<int>& content, std::uint64_t cap) {
  for (int c : content) {
    if (c < 0) throw std::invalid_argument("negative content entry");
  }
  Enumerator e(content, cap, false);
  e.run();
  return e.count;
}

std::vector<TwoRowTableau> enumerate_tableaux(const SchubertProblem& p, std::uint64_t cap) {
  return enumerate_tableaux_content(p.parts(), cap);
}

KostkaValue count_tableaux(const SchubertProblem& p, std::uint64_t cap) {
  return KostkaValue(count_tableaux_content(p.parts(), cap));
}

TwoRowTableau iota(const TwoRowTableau& t, int mu, int alpha, int beta, int gamma) {
  if (mu < 0 || alpha < 1 || beta < 1 || gamma < 1) {
    throw std::invalid_argument("iota: mu must be >= 0 and alpha, beta, gamma >= 1");
  }
  if (!(alpha <= beta && beta <= gamma)) {
    throw OrderingError("iota: need alpha <= beta <= gamma");
  }
  if (!(alpha < gamma)) {
    throw OrderingError("iota: need alpha < gamma");
  }
  if (!t.well_formed()) {
    throw ContentMismatchError("iota: input is not a two-row tableau");
  }

  // recover b_1..b_mu from the tableau and check the source content
  std::vector<int> counts(static_cast<std::size_t>(mu) + 2, 0);
  for (const auto* row : {&t.row1, &t.row2}) {
    for (int v : *row) {
      if (v < 1 || v > mu + 2) {
        throw ContentMismatchError("iota: entry " + std::to_string(v) + " out of range 1.." +
                                   std::to_string(mu + 2));
      }
      ++counts[static_cast<std::size_t>(v - 1)];
    }
  }
  if (counts[static_cast<std::size_t>(mu)] != alpha ||
      counts[static_cast<std::size_t>(mu + 1)] != beta + gamma) {
    throw ContentMismatchError("iota: content does not match (b_*, alpha, beta+gamma)");
  }
  for (int i = 0; i < mu; ++i) {
    if (counts[static_cast<std::size_t>(i)] < 1) {
      throw ContentMismatchError("iota: entry " + std::to_string(i + 1) + " is absent");
    }
  }

  // the lemma's hypothesis: (b_1,...,b_mu, alpha, beta, gamma) reduced and valid
  std::vector<int> hypothesis(counts.begin(), counts.begin() + mu);
  hypothesis.push_back(alpha);
  hypothesis.push_back(beta);
  hypothesis.push_back(gamma);
  SchubertProblem hp(hypothesis);
  if (!is_valid(hp) || !is_reduced(hp)) {
    throw NotReducedError("iota: (b_*, alpha, beta, gamma) is not a reduced valid problem");
  }

  // a = trailing (mu+1)s in row one; all (mu+2)s sit at the end of row two
  int a = 0;
  for (auto it = t.row1.rbegin(); it != t.row1.rend() && *it == mu + 1; ++it) ++a;

  TwoRowTableau out;
  out.row1 = t.row1;
  out.row2.reserve(t.row2.size());
  for (int v : t.row2) {
    if (v <= mu) out.row2.push_back(v);
  }
  out.row2.insert(out.row2.end(), static_cast<std::size_t>(gamma - a), mu + 1);
  out.row2.insert(out.row2.end(), static_cast<std::size_t>(beta + alpha), mu + 2);
  return out;
}

}  // namespace kostka
