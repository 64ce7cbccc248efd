#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "kostka/problem.hpp"
#include "kostka/types.hpp"

namespace kostka {

struct EnumerationCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ContentMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct OrderingError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotReducedError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Two equal-length rows, weakly increasing along rows and strictly
/// increasing down columns; entry i appears content[i-1] times.
struct TwoRowTableau {
  std::vector<int> row1, row2;

  bool well_formed() const;                              // shape + row/column order
  bool has_content(const std::vector<int>& content) const;
  std::string ascii() const;                             // two-line grid
  bool operator==(const TwoRowTableau&) const = default;
  bool operator<(const TwoRowTableau& o) const {         // reading word row1 ++ row2
    return row1 != o.row1 ? row1 < o.row1 : row2 < o.row2;
  }
};

/// All tableaux for an explicit content vector (entry i+1 appears content[i]
/// times; the order of the vector matters for the tableau set, not for its
/// size).  Output is sorted by reading word.  Odd content sum or an invalid
/// problem give the empty list.  Throws EnumerationCapError beyond cap.
std::vector<TwoRowTableau> enumerate_tableaux_content(const std::vector<int>& content,
                                                      std::uint64_t cap = kDefaultEnumerationCap);

std::uint64_t count_tableaux_content(const std::vector<int>& content,
                                     std::uint64_t cap = kDefaultEnumerationCap);

/// Brute-force oracle for a problem in canonical order.
std::vector<TwoRowTableau> enumerate_tableaux(const SchubertProblem& p,
                                              std::uint64_t cap = kDefaultEnumerationCap);

/// Count without materializing the list.
KostkaValue count_tableaux(const SchubertProblem& p, std::uint64_t cap = kDefaultEnumerationCap);

/// The combinatorial injection behind the unequal-entries inequality.
///
/// Takes t with content (b_1,...,b_mu, alpha, beta+gamma) where
/// alpha <= beta <= gamma, alpha < gamma and (b_*, alpha, beta, gamma) is a
/// reduced valid problem.  Rewrites the tail of row two -- the block of
/// (mu+1)s of length alpha-a followed by (mu+2)s of length beta+gamma becomes
/// (mu+1)s of length gamma-a followed by (mu+2)s of length beta+alpha, where
/// a is the number of (mu+1)s ending row one.  Entries <= mu are untouched.
/// The result has content (b_1,...,b_mu, gamma, beta+alpha).
TwoRowTableau iota(const TwoRowTableau& t, int mu, int alpha, int beta, int gamma);

}  // namespace kostka
