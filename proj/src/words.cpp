#include "rademacher/words.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>
#include <sstream>

namespace rademacher {

namespace {

long order_of(Generator g, const TriangleGroup& group) {
  return g == Generator::S ? group.p() : group.q();
}

const GroupMatrix& syllable_matrix(const Syllable& s, const TriangleGroup& group) {
  return s.generator == Generator::S ? group.power_S(s.exponent) : group.power_U(s.exponent);
}

// Reduces an exponent into [0, order) and reports whether -I was split off.
std::pair<long, bool> reduce_exponent(long e, long order) {
  long r = e % (2 * order);
  if (r < 0) r += 2 * order;
  if (r >= order) return {r - order, true};
  return {r, false};
}

}  // namespace

Word parse_word(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  Word w;
  skip_ws();
  if (pos < text.size() && text[pos] == '-') {
    w.sign = -1;
    ++pos;
    skip_ws();
  }
  if (pos < text.size() && text[pos] == 'I') {
    ++pos;
    skip_ws();
    if (pos != text.size()) throw ParseError("unexpected character after 'I'", pos);
    return w;
  }
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    const char letter = text[pos];
    if (letter != 'S' && letter != 'U')
      throw ParseError(std::string("unexpected character '") + letter + "'", pos);
    ++pos;
    Syllable syl{letter == 'S' ? Generator::S : Generator::U, 1};
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_ws();
      const std::size_t start = pos;
      long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        const int digit = text[pos] - '0';
        if (value > (std::numeric_limits<long>::max() - digit) / 10)
          throw ParseError("exponent out of range", start);
        value = value * 10 + digit;
        ++pos;
      }
      if (pos == start) throw ParseError("expected unsigned exponent after '^'", pos);
      syl.exponent = value;
    }
    w.syllables.push_back(syl);
  }
  if (w.syllables.empty()) throw ParseError("empty word", pos);
  return w;
}

std::string to_string(const Word& w) {
  std::ostringstream os;
  if (w.sign < 0) os << '-';
  if (w.syllables.empty()) {
    os << 'I';
    return os.str();
  }
  bool first = true;
  for (const auto& s : w.syllables) {
    if (!first) os << ' ';
    first = false;
    os << static_cast<char>(s.generator);
    if (s.exponent != 1) os << '^' << s.exponent;
  }
  return os.str();
}

std::string to_string(const CyclicKey& key) {
  std::ostringstream os;
  if (key.sign < 0) os << '-';
  os << '(';
  for (std::size_t i = 0; i < key.pairs.size(); ++i) {
    if (i) os << ',';
    os << '(' << key.pairs[i].first << ',' << key.pairs[i].second << ')';
  }
  os << ')';
  return os.str();
}

Word normalize(const Word& w, const TriangleGroup& group) {
  Word out;
  out.sign = w.sign;
  for (const auto& syl : w.syllables) {
    const long order = order_of(syl.generator, group);
    auto [e, flip] = reduce_exponent(syl.exponent, order);
    if (flip) out.sign = -out.sign;
    if (e == 0) continue;
    if (!out.syllables.empty() && out.syllables.back().generator == syl.generator) {
      auto [merged, flip2] = reduce_exponent(out.syllables.back().exponent + e, order);
      if (flip2) out.sign = -out.sign;
      out.syllables.pop_back();
      if (merged != 0) out.syllables.push_back({syl.generator, merged});
      continue;
    }
    out.syllables.push_back({syl.generator, e});
  }
  return out;
}

GroupMatrix word_to_matrix(const Word& w, const TriangleGroup& group) {
  if (w.syllables.empty()) return w.sign < 0 ? -group.identity() : group.identity();
  GroupMatrix m = syllable_matrix(w.syllables.front(), group);
  for (std::size_t i = 1; i < w.syllables.size(); ++i) m = m * syllable_matrix(w.syllables[i], group);
  return w.sign < 0 ? -m : m;
}

Word concat(const Word& w1, const Word& w2) {
  Word out{w1.sign * w2.sign, w1.syllables};
  out.syllables.insert(out.syllables.end(), w2.syllables.begin(), w2.syllables.end());
  return out;
}

Word inverse(const Word& w, const TriangleGroup& group) {
  Word out{w.sign, {}};
  for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it) {
    const long period = 2 * order_of(it->generator, group);
    long e = (-it->exponent) % period;
    if (e < 0) e += period;
    out.syllables.push_back({it->generator, e});
  }
  return out;
}

namespace {

struct Candidate {
  Syllable syllable;
  const GroupMatrix* strip;  // syllable^{-1}
};

class DepthSearch {
 public:
  DepthSearch(const TriangleGroup& group, const GroupMatrix& target)
      : group_(group), target_(target), negated_(-target) {}

  std::optional<Word> run(int max_syllables) {
    for (int depth = 0; depth <= max_syllables; ++depth) {
      path_.clear();
      if (auto w = descend(group_.identity(), depth, std::nullopt)) return w;
    }
    return std::nullopt;
  }

 private:
  std::optional<Word> descend(const GroupMatrix& prefix, int remaining, std::optional<Generator> last) {
    if (remaining == 0) {
      if (prefix == target_) return Word{1, path_};
      if (prefix == negated_) return Word{-1, path_};
      return std::nullopt;
    }
    for (Generator g : {Generator::S, Generator::U}) {
      if (last == g) continue;
      const long order = order_of(g, group_);
      for (long e = 1; e < order; ++e) {
        path_.push_back({g, e});
        const GroupMatrix next = prefix * syllable_matrix(path_.back(), group_);
        if (auto w = descend(next, remaining - 1, g)) return w;
        path_.pop_back();
      }
    }
    return std::nullopt;
  }

  const TriangleGroup& group_;
  const GroupMatrix& target_;
  GroupMatrix negated_;
  std::vector<Syllable> path_;
};

}  // namespace

Word matrix_to_word(const GroupMatrix& g, const TriangleGroup& group, int max_syllables) {
  if (!g.context()->same_as(*group.context())) throw ContextMismatch();
  const GroupMatrix id = group.identity();
  const GroupMatrix minus_id = -id;

  std::vector<Candidate> candidates;
  for (long n = 1; n < group.p(); ++n) candidates.push_back({{Generator::S, n}, &group.power_S(-n)});
  for (long m = 1; m < group.q(); ++m) candidates.push_back({{Generator::U, m}, &group.power_U(-m)});

  // Greedy: peel syllables off the left while the Frobenius norm strictly drops.
  Word prefix;
  GroupMatrix current = g;
  AlgebraicReal norm = frobenius_norm2(current);
  int used = 0;
  while (!(current == id) && !(current == minus_id) && used < max_syllables) {
    std::optional<GroupMatrix> best;
    std::optional<AlgebraicReal> best_norm;
    const Candidate* best_candidate = nullptr;
    for (const auto& cand : candidates) {
      GroupMatrix stripped = *cand.strip * current;
      AlgebraicReal n = frobenius_norm2(stripped);
      if (!best_norm || compare(n, *best_norm) < 0) {
        best = std::move(stripped);
        best_norm = std::move(n);
        best_candidate = &cand;
      }
    }
    if (compare(*best_norm, norm) >= 0) break;
    prefix.syllables.push_back(best_candidate->syllable);
    current = std::move(*best);
    norm = std::move(*best_norm);
    ++used;
  }

  auto finish = [&](Word w) -> std::optional<Word> {
    w = normalize(w, group);
    if (static_cast<int>(w.syllables.size()) > max_syllables) return std::nullopt;
    if (!(word_to_matrix(w, group) == g)) return std::nullopt;
    return w;
  };

  std::optional<Word> result;
  if (current == id || current == minus_id) {
    prefix.sign = current == id ? 1 : -1;
    result = finish(prefix);
  } else if (auto tail = DepthSearch(group, current).run(max_syllables - used)) {
    result = finish(concat(prefix, *tail));
  }
  if (!result && used > 0) {
    if (auto whole = DepthSearch(group, g).run(max_syllables)) result = finish(*whole);
  }
  if (!result)
    throw NotFound("no word with at most " + std::to_string(max_syllables) +
                   " syllables evaluates to the matrix");
  return *result;
}

CyclicKey cyclic_key(const Word& w, const TriangleGroup& group) {
  Word nw = normalize(w, group);
  auto& syl = nw.syllables;
  int sign = nw.sign;

  // Conjugate the last syllable onto the front while the ends share a generator.
  while (syl.size() >= 2 && syl.front().generator == syl.back().generator) {
    const long order = order_of(syl.front().generator, group);
    auto [merged, flip] = reduce_exponent(syl.front().exponent + syl.back().exponent, order);
    if (flip) sign = -sign;
    syl.pop_back();
    if (merged == 0)
      syl.erase(syl.begin());
    else
      syl.front().exponent = merged;
  }
  if (syl.size() < 2)
    throw NotCyclicallyAlternating("word '" + to_string(w) +
                                   "' is conjugate to +-I or a power of a single generator");
  if (syl.front().generator == Generator::U) std::rotate(syl.begin(), syl.begin() + 1, syl.end());

  CyclicKey key;
  key.sign = sign;
  for (std::size_t i = 0; i < syl.size(); i += 2) key.pairs.emplace_back(syl[i].exponent, syl[i + 1].exponent);
  const std::size_t shift = least_rotation(key.pairs) % key.pairs.size();
  std::rotate(key.pairs.begin(), key.pairs.begin() + static_cast<long>(shift), key.pairs.end());
  return key;
}

WordEnumeration::WordEnumeration(const TriangleGroup& group, int r_max, bool positive_only)
    : p_(group.p()),
      q_(group.q()),
      r_max_(r_max),
      positive_only_(positive_only),
      pairs_per_block_(static_cast<std::uint64_t>(group.p() - 1) * static_cast<std::uint64_t>(group.q() - 1)) {
  if (r_max < 1) throw std::invalid_argument("r_max must be at least 1");
  std::uint64_t total = 0, block = 1;
  const std::uint64_t limit = std::uint64_t{1} << 60;
  for (int r = 1; r <= r_max; ++r) {
    if (block > limit / pairs_per_block_) throw std::overflow_error("word enumeration too large");
    block *= pairs_per_block_;
    total += positive_only ? block : 2 * block;
  }
  total_ = static_cast<std::size_t>(total);
}

Word WordEnumeration::operator[](std::size_t index) const {
  std::uint64_t rest = index;
  std::uint64_t block = 1;
  for (int r = 1; r <= r_max_; ++r) {
    block *= pairs_per_block_;
    const std::uint64_t span = positive_only_ ? block : 2 * block;
    if (rest >= span) {
      rest -= span;
      continue;
    }
    Word w;
    w.sign = rest < block ? 1 : -1;
    std::uint64_t code = rest % block;
    std::vector<Syllable> syl(static_cast<std::size_t>(2 * r));
    for (int j = r - 1; j >= 0; --j) {
      const std::uint64_t digit = code % pairs_per_block_;
      code /= pairs_per_block_;
      syl[static_cast<std::size_t>(2 * j)] = {Generator::S, static_cast<long>(digit / (q_ - 1)) + 1};
      syl[static_cast<std::size_t>(2 * j + 1)] = {Generator::U, static_cast<long>(digit % (q_ - 1)) + 1};
    }
    w.syllables = std::move(syl);
    return w;
  }
  throw std::out_of_range("word index out of range");
}

std::vector<Word> WordEnumeration::all() const {
  std::vector<Word> out;
  out.reserve(total_);
  for (std::size_t i = 0; i < total_; ++i) out.push_back((*this)[i]);
  return out;
}

std::vector<Word> enumerate_words(const TriangleGroup& group, int r_max) {
  return WordEnumeration(group, r_max).all();
}

std::vector<Word> enumerate_normalized_words(const TriangleGroup& group, int max_syllables) {
  std::vector<Word> out;
  out.push_back({1, {}});
  out.push_back({-1, {}});
  for (int len = 1; len <= max_syllables; ++len) {
    for (Generator start : {Generator::S, Generator::U}) {
      for (int sign : {1, -1}) {
        std::vector<Syllable> syl(static_cast<std::size_t>(len));
        for (int i = 0; i < len; ++i) {
          const bool is_start = i % 2 == 0;
          syl[i].generator = is_start ? start : (start == Generator::S ? Generator::U : Generator::S);
          syl[i].exponent = 1;
        }
        // odometer over exponents, last syllable fastest
        while (true) {
          out.push_back({sign, syl});
          int i = len - 1;
          for (; i >= 0; --i) {
            if (++syl[i].exponent < order_of(syl[i].generator, group)) break;
            syl[i].exponent = 1;
          }
          if (i < 0) break;
        }
      }
    }
  }
  return out;
}

}  // namespace rademacher
