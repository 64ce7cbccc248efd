#include "kostka/problem.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

namespace kostka {

SchubertProblem::SchubertProblem(std::vector<int> raw) : parts_(std::move(raw)) {
  for (int v : parts_) {
    if (v <= 0) {
      throw NonpositivePartError("Schubert problem parts must be positive, got " +
                                 std::to_string(v));
    }
  }
  sum_ = std::accumulate(parts_.begin(), parts_.end(), 0ll);
  if (sum_ % 2 != 0) {
    throw OddSumError("Schubert problem needs an even sum, got " + std::to_string(sum_));
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

std::string SchubertProblem::to_string() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out << ',';
    out << parts_[k];
  }
  return out.str();
}

SchubertProblem SchubertProblem::parse(const std::string& text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    int value = 0;
    auto first = text.data() + pos;
    auto last = text.data() + comma;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
      throw ParseError("cannot parse problem entry '" + text.substr(pos, comma - pos) + "'");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  if (!text.empty() && text.back() == ',') throw ParseError("trailing comma in problem");
  return SchubertProblem(std::move(parts));
}

long long n_of(const SchubertProblem& p) { return (p.sum() + 2) / 2; }

bool is_valid(const SchubertProblem& p) {
  if (p.is_empty()) return true;
  // canonical order: parts()[0] is the maximum
  return p.parts()[0] <= n_of(p) - 1;
}

bool is_reduced(const SchubertProblem& p) {
  if (p.m() <= 1) return true;
  return p.parts()[0] + p.parts()[1] < n_of(p);
}

namespace {

// One reduction step on canonical parts: decrement the two largest, drop zeros.
std::vector<int> step_once(const std::vector<int>& parts) {
  std::vector<int> next;
  next.reserve(parts.size());
  int a = parts[0] - 1;
  int b = parts[1] - 1;
  // keep descending order with a simple merge of the decremented pair
  std::size_t k = 2;
  for (int v : {a, b}) {
    while (k < parts.size() && parts[k] > v) next.push_back(parts[k++]);
    if (v > 0) next.push_back(v);
  }
  while (k < parts.size()) next.push_back(parts[k++]);
  return next;
}

SchubertProblem from_canonical(std::vector<int> parts) {
  // parts are already sorted and positive; reuse the checked constructor,
  // which sorts again (cheap at these sizes)
  return SchubertProblem(std::move(parts));
}

}  // namespace

ReductionTrace reduce(const SchubertProblem& p) {
  if (!is_valid(p)) {
    throw std::invalid_argument("reduce() requires a valid problem, got (" + p.to_string() + ")");
  }
  ReductionTrace trace;
  SchubertProblem cur = p;
  while (!is_reduced(cur)) {
    SchubertProblem next = from_canonical(step_once(cur.parts()));
    trace.steps.push_back(ReductionStep{0, 1, next});
    cur = std::move(next);
  }
  trace.final = std::move(cur);
  return trace;
}

SchubertProblem reduce_fast(const SchubertProblem& p) {
  if (p.m() == 2 && p.parts()[0] == p.parts()[1]) return SchubertProblem{};
  std::vector<int> parts = p.parts();
  while (parts.size() > 1) {
    long long n = (std::accumulate(parts.begin(), parts.end(), 0ll) + 2) / 2;
    if (parts[0] + parts[1] < n) break;
    parts = step_once(parts);
  }
  return from_canonical(std::move(parts));
}

}  // namespace kostka
