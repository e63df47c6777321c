#pragma once

// Words in the generators S = S_p and U = U_q.
//
// Grammar (ASCII, whitespace ignored):
//   word := ['-'] term+ | ['-'] 'I'
//   term := ('S' | 'U') ['^' unsigned-int]

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rademacher/triangle_group.hpp"

namespace rademacher {

enum class Generator : char { S = 'S', U = 'U' };

struct Syllable {
  Generator generator;
  long exponent;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// sign * product of syllables. An empty syllable list is +-I.
struct Word {
  int sign = 1;
  std::vector<Syllable> syllables;

  friend bool operator==(const Word&, const Word&) = default;
};

/// Exponent pairs (n_j, m_j) of a cyclically reduced word
/// sign * S^{n_1} U^{m_1} ... S^{n_r} U^{m_r}, rotated to the lexicographically
/// least rotation.
struct CyclicKey {
  int sign = 1;
  std::vector<std::pair<long, long>> pairs;

  friend bool operator==(const CyclicKey&, const CyclicKey&) = default;
};

/// Throws ParseError with the offending byte offset.
Word parse_word(std::string_view text);
/// Canonical text: "S^2 U S U^3", "-S U", "I", "-I".
std::string to_string(const Word& w);
std::string to_string(const CyclicKey& key);

/// Merges adjacent syllables of one generator, reduces S-exponents into (0, p)
/// and U-exponents into (0, q) using S^p = U^q = -I, drops empty syllables.
Word normalize(const Word& w, const TriangleGroup& group);

GroupMatrix word_to_matrix(const Word& w, const TriangleGroup& group);

/// Concatenation: the word for w1 * w2.
Word concat(const Word& w1, const Word& w2);
/// A word for the inverse element.
Word inverse(const Word& w, const TriangleGroup& group);

/// Normalized word evaluating exactly to g. Greedy left-stripping by
/// decreasing a^2 + b^2 + c^2 + d^2, with an iterative-deepening fallback over
/// normalized words of at most max_syllables syllables. Throws NotFound when
/// the budget is exhausted; this cannot tell non-membership in the group from
/// a budget that is too small.
Word matrix_to_word(const GroupMatrix& g, const TriangleGroup& group, int max_syllables);

/// Minimal-rotation key of the conjugacy class of w. Throws
/// NotCyclicallyAlternating when w is conjugate to +-I or a generator power.
CyclicKey cyclic_key(const Word& w, const TriangleGroup& group);

/// Index of the least rotation of a sequence (Booth's algorithm, linear time).
template <class T>
std::size_t least_rotation(const std::vector<T>& s);

/// Enumeration of sign * S^{n_1} U^{m_1} ... S^{n_r} U^{m_r}, 1 <= r <= r_max,
/// 0 < n_j < p, 0 < m_j < q. Ordered by r, then sign (+ first), then exponent
/// tuples lexicographically. Supports random access so the range can be split
/// across workers by index.
class WordEnumeration {
 public:
  WordEnumeration(const TriangleGroup& group, int r_max, bool positive_only = false);

  std::size_t size() const noexcept { return total_; }
  Word operator[](std::size_t index) const;
  std::vector<Word> all() const;

 private:
  int p_;
  int q_;
  int r_max_;
  bool positive_only_;
  std::uint64_t pairs_per_block_;  // (p-1)(q-1)
  std::size_t total_;
};

/// All words of the WordEnumeration, materialized.
std::vector<Word> enumerate_words(const TriangleGroup& group, int r_max);

/// Every normalized word with at most max_syllables syllables (either starting
/// generator, both signs), in deterministic order.
std::vector<Word> enumerate_normalized_words(const TriangleGroup& group, int max_syllables);

template <class T>
std::size_t least_rotation(const std::vector<T>& s) {
  const long n = static_cast<long>(s.size());
  if (n == 0) return 0;
  auto at = [&](long i) -> const T& { return s[static_cast<std::size_t>(i % n)]; };
  std::vector<long> failure(static_cast<std::size_t>(2 * n), -1);
  long k = 0;
  for (long j = 1; j < 2 * n; ++j) {
    const T& sj = at(j);
    long i = failure[static_cast<std::size_t>(j - k - 1)];
    while (i != -1 && !(sj == at(k + i + 1))) {
      if (sj < at(k + i + 1)) k = j - i - 1;
      i = failure[static_cast<std::size_t>(i)];
    }
    if (!(sj == at(k + i + 1))) {  // i == -1 here
      if (sj < at(k)) k = j;
      failure[static_cast<std::size_t>(j - k)] = -1;
    } else {
      failure[static_cast<std::size_t>(j - k)] = i + 1;
    }
  }
  return static_cast<std::size_t>(k);
}

}  // namespace rademacher
