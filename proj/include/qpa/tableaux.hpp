#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qpa/partition.hpp"

namespace qpa {

// Default cap for the exhaustive-search helpers; callers may raise it
// explicitly. Exceeding a cap is an error, never a silent truncation.
inline constexpr int64_t kDefaultEnumerationCap = 10;

// Word over the alphabet {1..d}.
struct Word {
  int alphabet = 0;
  std::vector<int> letters;

  Word() = default;
  Word(int alphabet, std::vector<int> letters);
  std::vector<int64_t> histogram() const;
};

// Semistandard Young tableau stored as the per-row letter-count matrix
// m[row][letter] with 1 <= row <= letter <= d. The matrix is O(d^2)
// regardless of how many boxes the tableau holds, which is what makes
// streaming insertion cheap for very long words.
class SemistandardTableau {
 public:
  explicit SemistandardTableau(int alphabet);

  // Builds from explicit rows of letters (weakly increasing within a row)
  // and validates semistandardness.
  static SemistandardTableau from_rows(int alphabet,
                                       const std::vector<std::vector<int>>& rows);

  int alphabet() const { return d_; }
  int64_t cell_count(int row, int letter) const { return at(row, letter); }
  int64_t size() const;
  bool empty() const { return size() == 0; }

  // RSK row insertion (bump the leftmost entry strictly greater than the
  // incoming letter). Returns the 1-based row that gained a box.
  int insert(int letter);

  Partition shape() const;
  SemistandardTableau restrict_below(int letter) const;  // T^{<letter}
  std::vector<int64_t> type() const;
  std::vector<std::vector<int>> rows() const;  // cell-list view for display
  std::string str() const;
  bool is_valid() const;

  friend bool operator==(const SemistandardTableau&, const SemistandardTableau&) = default;

 private:
  int64_t& at(int row, int letter) {
    return counts_[static_cast<std::size_t>(row - 1) * d_ + (letter - 1)];
  }
  int64_t at(int row, int letter) const {
    return counts_[static_cast<std::size_t>(row - 1) * d_ + (letter - 1)];
  }

  int d_ = 0;
  std::vector<int64_t> counts_;  // d_ * d_, row-major
};

struct StandardTableau {
  std::vector<std::vector<int64_t>> rows;

  Partition shape() const;
  bool is_valid() const;
  std::string str() const;
  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
};

struct RskResult {
  Partition shape;               // lambda
  StandardTableau recording;     // S
  SemistandardTableau insertion;  // T
};

// Row overhangs b_i = mu_i - lambda_{i+1} for i = 1..d-1, where mu is the
// shape left after deleting every letter-d box.
struct Overhangs {
  std::vector<int64_t> values;
  int64_t sum() const;
};

SemistandardTableau rsk_insert(SemistandardTableau tableau, int letter);
RskResult rsk(const Word& word);
Overhangs overhangs(const Partition& lambda, const Partition& mu, int alphabet);

// Length of the longest weakly increasing subsequence, by patience sorting;
// shares no code with the insertion above.
int64_t lis_weak(std::span<const int> letters);
int64_t lis_weak(const Word& word);

// Largest total size of a union of `subsequences` disjoint weakly increasing
// subsequences, by exhaustive assignment. Words longer than `cap` are
// rejected.
int64_t greene_union(const Word& word, int subsequences,
                     int64_t cap = kDefaultEnumerationCap);

// Number of standard Young tableaux of the given shape (hook lengths, exact).
int64_t num_syt(const Partition& shape);

std::vector<SemistandardTableau> enumerate_ssyt(const Partition& shape, int alphabet,
                                                int64_t cap = kDefaultEnumerationCap);
std::vector<StandardTableau> enumerate_syt(const Partition& shape,
                                           int64_t cap = kDefaultEnumerationCap);

}  // namespace qpa
