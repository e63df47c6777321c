#include "rademacher/verify.hpp"

#include <omp.h>

#include <array>
#include <sstream>

namespace rademacher {

std::optional<Suite> parse_suite(const std::string& name) {
  if (name == "all") return Suite::all;
  if (name == "lemmas") return Suite::lemmas;
  if (name == "theorem") return Suite::theorem;
  if (name == "classical") return Suite::classical;
  if (name == "cocycle") return Suite::cocycle;
  if (name == "linking") return Suite::linking;
  if (name == "words") return Suite::words;
  return std::nullopt;
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::all: return "all";
    case Suite::lemmas: return "lemmas";
    case Suite::theorem: return "theorem";
    case Suite::classical: return "classical";
    case Suite::cocycle: return "cocycle";
    case Suite::linking: return "linking";
    case Suite::words: return "words";
  }
  return "?";
}

bool SuiteReport::passed() const noexcept {
  for (const auto& r : results)
    if (!r.passed()) return false;
  return true;
}

namespace {

std::optional<std::string> guarded(const IndexedCheck& check, std::size_t i) {
  try {
    return check(i);
  } catch (const std::exception& e) {
    return "item " + std::to_string(i) + ": exception: " + e.what();
  }
}

}  // namespace

CheckResult run_indexed_serial(std::string name, std::size_t count, const IndexedCheck& check) {
  CheckResult result{std::move(name), count, 0, std::nullopt};
  for (std::size_t i = 0; i < count; ++i) {
    if (auto failure = guarded(check, i)) {
      if (result.failures++ == 0) result.first_counterexample = std::move(failure);
    }
  }
  return result;
}

CheckResult run_indexed(std::string name, std::size_t count, const IndexedCheck& check, int threads) {
  CheckResult result{std::move(name), count, 0, std::nullopt};
  std::size_t first_index = count;
  const long n = static_cast<long>(count);
  const int workers = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel num_threads(workers)
  {
    std::size_t local_failures = 0;
    std::size_t local_first = count;
    std::optional<std::string> local_message;

#pragma omp for schedule(dynamic, 4)
    for (long i = 0; i < n; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      if (auto failure = guarded(check, idx)) {
        ++local_failures;
        if (idx < local_first) {
          local_first = idx;
          local_message = std::move(failure);
        }
      }
    }

#pragma omp critical(rademacher_merge)
    {
      result.failures += local_failures;
      if (local_first < first_index) {
        first_index = local_first;
        result.first_counterexample = std::move(local_message);
      }
    }
  }
  return result;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  // splitmix64 over a mix of the three inputs
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1) + 0xBF58476D1CE4E5B9ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

CheckResult dispatch(std::string name, std::size_t count, const IndexedCheck& check, const VerifyOptions& o) {
  return o.parallel ? run_indexed(std::move(name), count, check, o.threads)
                    : run_indexed_serial(std::move(name), count, check);
}

using Items = std::vector<std::function<std::optional<std::string>()>>;

CheckResult run_items(std::string name, const Items& items) {
  return run_indexed_serial(std::move(name), items.size(), [&](std::size_t i) { return items[i](); });
}

CheckResult skipped(std::string name, const std::string& why) {
  CheckResult r;
  r.name = std::move(name) + " (skipped: " + why + ")";
  return r;
}

std::string group_label(const TriangleGroup& g) {
  return "(" + std::to_string(g.p()) + "," + std::to_string(g.q()) + ")";
}

template <class... Args>
std::string describe(const Args&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

// Stream ids for trial_seed.
enum Stream : std::uint64_t { kConjugacy = 1, kCocycle, kLog, kAdditivity, kIndependence, kNormalize };

Word negate(Word w) {
  w.sign = -w.sign;
  return w;
}

}  // namespace

CheckResult check_theorem(const TriangleGroup& group, int max_r, const VerifyOptions& o) {
  const WordEnumeration words(group, max_r);
  return dispatch("Psi cocycle fold = sum(pq - q n_j - p m_j), r <= " + std::to_string(max_r), words.size(),
                  [&](std::size_t i) -> std::optional<std::string> {
                    const Word w = words[i];
                    const long by_fold = rademacher_symbol(w, group);
                    const long by_formula = rademacher_formula(cyclic_key(w, group), group);
                    if (by_fold == by_formula) return std::nullopt;
                    return describe(to_string(w), ": cocycle ", by_fold, " formula ", by_formula);
                  },
                  o);
}

CheckResult check_classical(const TriangleGroup& group, int max_r, const VerifyOptions& o) {
  const std::string name = "Psi_{2,3} = Phi - 3 sgn(c(a+d)), r <= " + std::to_string(max_r);
  if (group.p() != 2 || group.q() != 3) return skipped(name, "only defined for (2,3)");
  const WordEnumeration words(group, max_r);
  return dispatch(name, words.size(),
                  [&](std::size_t i) -> std::optional<std::string> {
                    const Word w = words[i];
                    const SymbolValue v = evaluate_symbol(w, group);
                    const auto m = to_integer_matrix(v.matrix);
                    if (!m) return describe(to_string(w), ": matrix is not integral");
                    const long classical = rademacher_classical(*m);
                    if (classical == v.Psi) return std::nullopt;
                    return describe(to_string(w), ": cocycle ", v.Psi, " classical ", classical);
                  },
                  o);
}

CheckResult check_conjugacy(const TriangleGroup& group, const VerifyOptions& o) {
  const WordEnumeration words(group, o.max_r);
  return dispatch(
      "Psi(g^-1 w g) = Psi(w) = Psi(-w), " + std::to_string(o.trials) + " seeded trials", o.trials,
      [&](std::size_t i) -> std::optional<std::string> {
        std::mt19937_64 rng(trial_seed(o.seed, kConjugacy, i));
        const Word w = words[std::uniform_int_distribution<std::size_t>(0, words.size() - 1)(rng)];
        const Word g = random_word(rng, group, o.conjugator_syllables);
        const Word conjugate = concat(concat(inverse(g, group), w), g);
        const long base = rademacher_symbol(w, group);
        const long conj = rademacher_symbol(conjugate, group);
        const long neg = rademacher_symbol(negate(w), group);
        if (base == conj && base == neg) return std::nullopt;
        return describe("w = ", to_string(w), ", g = ", to_string(g), ": Psi(w) ", base, " Psi(g^-1wg) ", conj,
                        " Psi(-w) ", neg);
      },
      o);
}

CheckResult check_cocycle_identity(const TriangleGroup& group, const VerifyOptions& o) {
  const WordEnumeration words(group, o.max_r);
  return dispatch(
      "W(g1g2,g3) + W(g1,g2) = W(g1,g2g3) + W(g2,g3), W in {-1,0,1}, " + std::to_string(o.trials) + " triples",
      o.trials,
      [&](std::size_t i) -> std::optional<std::string> {
        std::mt19937_64 rng(trial_seed(o.seed, kCocycle, i));
        std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
        const Word w1 = words[pick(rng)], w2 = words[pick(rng)], w3 = words[pick(rng)];
        const GroupMatrix g1 = word_to_matrix(w1, group), g2 = word_to_matrix(w2, group),
                          g3 = word_to_matrix(w3, group);
        const std::array<int, 4> values{asai_w(g1 * g2, g3), asai_w(g1, g2), asai_w(g1, g2 * g3), asai_w(g2, g3)};
        for (int v : values)
          if (v < -1 || v > 1) return describe(to_string(w1), " | ", to_string(w2), " | ", to_string(w3), ": W = ", v);
        if (values[0] + values[1] == values[2] + values[3]) return std::nullopt;
        return describe(to_string(w1), " | ", to_string(w2), " | ", to_string(w3), ": ", values[0], " + ", values[1],
                        " != ", values[2], " + ", values[3]);
      },
      o);
}

CheckResult check_sign_formula_forms() {
  return run_indexed_serial("three-case and quarter forms of W agree on all 8 sign triples", 8,
                            [](std::size_t i) -> std::optional<std::string> {
                              const int s1 = (i & 1) ? -1 : 1, s2 = (i & 2) ? -1 : 1, s12 = (i & 4) ? -1 : 1;
                              const int quarter = asai_w_from_signs(s1, s2, s12);
                              const int cases = asai_w_case_form(s1, s2, s12);
                              if (quarter == cases && quarter >= -1 && quarter <= 1) return std::nullopt;
                              return describe("signs (", s1, ",", s2, ",", s12, "): quarter ", quarter, " cases ",
                                              cases);
                            });
}

CheckResult check_log_definition(const TriangleGroup& group, const VerifyOptions& o) {
  const WordEnumeration words(group, o.max_r);
  return dispatch(
      "log-branch W at z = i equals sign-formula W (residual < 1e-6), " + std::to_string(o.log_pairs) + " pairs",
      o.log_pairs,
      [&](std::size_t i) -> std::optional<std::string> {
        std::mt19937_64 rng(trial_seed(o.seed, kLog, i));
        std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
        const Word w1 = words[pick(rng)], w2 = words[pick(rng)];
        const GroupMatrix g1 = word_to_matrix(w1, group), g2 = word_to_matrix(w2, group);
        const int exact = asai_w(g1, g2);
        const LogCocycle numeric = asai_w_from_log_retrying(g1, g2, o.log_precision_bits);
        if (numeric.value == exact && numeric.residual < 1e-6) return std::nullopt;
        return describe(to_string(w1), " | ", to_string(w2), ": exact ", exact, " log ", numeric.value,
                        " residual ", numeric.residual);
      },
      o);
}

CheckResult check_generator_signs(const TriangleGroup& group) {
  const int p = group.p(), q = group.q();
  Items items;
  for (int n = 1; n <= p; ++n)
    items.push_back([&group, n, p]() -> std::optional<std::string> {
      const int expected = n == p ? -1 : 1;
      const int got = sgn(group.power_S(n));
      if (got == expected) return std::nullopt;
      return describe("sgn(S^", n, ") = ", got, ", expected ", expected);
    });
  for (int m = 1; m <= q; ++m)
    items.push_back([&group, m, q]() -> std::optional<std::string> {
      const int expected = m == q ? -1 : 1;
      const int got = sgn(group.power_U(m));
      if (got == expected) return std::nullopt;
      return describe("sgn(U^", m, ") = ", got, ", expected ", expected);
    });
  for (int n = 1; n < p; ++n)
    items.push_back([&group, n, p]() -> std::optional<std::string> {
      const int expected = n == p - 1 ? 1 : 0;
      const int got = asai_w(group.generator_S(), group.power_S(n));
      if (got == expected) return std::nullopt;
      return describe("W(S, S^", n, ") = ", got, ", expected ", expected);
    });
  for (int m = 1; m < q; ++m)
    items.push_back([&group, m, q]() -> std::optional<std::string> {
      const int expected = m == q - 1 ? 1 : 0;
      const int got = asai_w(group.generator_U(), group.power_U(m));
      if (got == expected) return std::nullopt;
      return describe("W(U, U^", m, ") = ", got, ", expected ", expected);
    });
  return run_items("sgn(S^n), sgn(U^m), W(S,S^n), W(U,U^m) " + group_label(group), items);
}

CheckResult check_sign_pattern(const TriangleGroup& group, int max_r, const VerifyOptions& o) {
  const WordEnumeration words(group, max_r, /*positive_only=*/true);
  return dispatch("entry sign pattern of S^n1 U^m1 ... S^nr U^mr, r <= " + std::to_string(max_r), words.size(),
                  [&](std::size_t i) -> std::optional<std::string> {
                    const Word w = words[i];
                    const GroupMatrix m = word_to_matrix(w, group);
                    const bool odd = (w.syllables.size() / 2) % 2 == 1;
                    const int a = sign_of(m.a()), b = sign_of(m.b()), c = sign_of(m.c()), d = sign_of(m.d());
                    const bool ok = odd ? (a < 0 && d < 0 && b >= 0 && c >= 0) : (a > 0 && d > 0 && b <= 0 && c <= 0);
                    if (ok) return std::nullopt;
                    return describe(to_string(w), ": entry signs (", a, ",", b, ";", c, ",", d, ")");
                  },
                  o);
}

CheckResult check_chebyshev(const TriangleGroup& group) {
  const auto& table = group.chebyshev();
  Items items;
  auto add = [&](int order, bool at_s) {
    for (int n = 0; n <= order; ++n)
      items.push_back([&table, n, order, at_s]() -> std::optional<std::string> {
        const int expected = (n == 0 || n == order) ? 0 : 1;
        const int got = sign_of(at_s ? table.at_s(n) : table.at_u(n));
        if (got == expected) return std::nullopt;
        return describe("sign C_", n, at_s ? "(s)" : "(u)", " = ", got, ", expected ", expected);
      });
  };
  add(group.p(), true);
  add(group.q(), false);
  return run_items("C_n(s) > 0 on (0,p), C_m(u) > 0 on (0,q), zero at the ends " + group_label(group), items);
}

CheckResult check_power_consistency(const TriangleGroup& group) {
  Items items;
  auto add = [&](Generator g, int order) {
    for (int n = 0; n <= 2 * order; ++n)
      items.push_back([&group, g, n]() -> std::optional<std::string> {
        const GroupMatrix& gen = g == Generator::S ? group.generator_S() : group.generator_U();
        GroupMatrix iterated = group.identity();
        for (int i = 0; i < n; ++i) iterated = iterated * gen;
        const GroupMatrix& closed = g == Generator::S ? group.power_S(n) : group.power_U(n);
        const GroupMatrix& back = g == Generator::S ? group.power_S(-n) : group.power_U(-n);
        if (closed == iterated && back == iterated.inverse()) return std::nullopt;
        return describe(static_cast<char>(g), "^", n, ": Chebyshev form differs from iterated product");
      });
  };
  add(Generator::S, group.p());
  add(Generator::U, group.q());
  return run_items("Chebyshev powers = iterated products, 0 <= n <= 2p / 2q " + group_label(group), items);
}

CheckResult check_generator_psi(const TriangleGroup& group) {
  const long p = group.p(), q = group.q();
  Items items;
  for (long n = 1; n < p; ++n)
    items.push_back([&group, n, q]() -> std::optional<std::string> {
      const long got = psi(Word{1, {{Generator::S, n}}}, group);
      if (got == -n * q) return std::nullopt;
      return describe("psi(S^", n, ") = ", got, ", expected ", -n * q);
    });
  for (long m = 1; m < q; ++m)
    items.push_back([&group, m, p]() -> std::optional<std::string> {
      const long got = psi(Word{1, {{Generator::U, m}}}, group);
      if (got == -m * p) return std::nullopt;
      return describe("psi(U^", m, ") = ", got, ", expected ", -m * p);
    });
  items.push_back([&group, p, q]() -> std::optional<std::string> {
    const long got = psi(Word{-1, {}}, group);
    if (got == p * q) return std::nullopt;
    return describe("psi(-I) = ", got, ", expected ", p * q);
  });
  items.push_back([&group]() -> std::optional<std::string> {
    const long plus = rademacher_symbol(Word{1, {}}, group), minus = rademacher_symbol(Word{-1, {}}, group);
    if (plus == 0 && minus == 0) return std::nullopt;
    return describe("Psi(I) = ", plus, ", Psi(-I) = ", minus);
  });
  return run_items("psi(S^n) = -nq, psi(U^m) = -mp, psi(-I) = pq " + group_label(group), items);
}

CheckResult check_psi_additivity(const TriangleGroup& group, const VerifyOptions& o) {
  const long two_pq = 2L * group.p() * group.q();
  return dispatch("psi(w1 w2) = psi(w1) + psi(w2) + 2pq W(w1, w2), " + std::to_string(o.trials) + " pairs",
                  o.trials,
                  [&](std::size_t i) -> std::optional<std::string> {
                    std::mt19937_64 rng(trial_seed(o.seed, kAdditivity, i));
                    const Word w1 = random_word(rng, group, 2 * o.max_r);
                    const Word w2 = random_word(rng, group, 2 * o.max_r);
                    const long whole = psi(concat(w1, w2), group);
                    const long parts = psi(w1, group) + psi(w2, group) +
                                       two_pq * asai_w(word_to_matrix(w1, group), word_to_matrix(w2, group));
                    if (whole == parts) return std::nullopt;
                    return describe(to_string(w1), " | ", to_string(w2), ": ", whole, " vs ", parts);
                  },
                  o);
}

CheckResult check_psi_word_independence(const TriangleGroup& group, const VerifyOptions& o) {
  return dispatch(
      "psi is independent of the word spelling one element, " + std::to_string(o.trials) + " trials", o.trials,
      [&](std::size_t i) -> std::optional<std::string> {
        std::mt19937_64 rng(trial_seed(o.seed, kIndependence, i));
        const Word w = random_word(rng, group, 2 * o.max_r);
        // respell: split syllables, add full periods, trade S^p for a sign, insert identities
        Word spelled{w.sign, {}};
        std::uniform_int_distribution<int> move(0, 3);
        auto period = [&](Generator g) { return g == Generator::S ? group.p() : group.q(); };
        for (const auto& syl : w.syllables) {
          const long order = period(syl.generator);
          switch (move(rng)) {
            case 0:
              spelled.syllables.push_back(syl);
              break;
            case 1: {
              const long a = std::uniform_int_distribution<long>(0, syl.exponent)(rng);
              spelled.syllables.push_back({syl.generator, a});
              spelled.syllables.push_back({syl.generator, syl.exponent - a});
              break;
            }
            case 2:
              spelled.syllables.push_back({syl.generator, syl.exponent + 2 * order});
              break;
            default:
              spelled.syllables.push_back({syl.generator, syl.exponent + order});
              spelled.sign = -spelled.sign;
              break;
          }
          if (move(rng) == 0) {
            const Generator other = syl.generator == Generator::S ? Generator::U : Generator::S;
            const long k = std::uniform_int_distribution<long>(1, period(other) - 1)(rng);
            spelled.syllables.push_back({other, k});
            spelled.syllables.push_back({other, 2 * period(other) - k});
          }
        }
        const GroupMatrix a = word_to_matrix(w, group), b = word_to_matrix(spelled, group);
        if (!(a == b)) return describe(to_string(w), " vs ", to_string(spelled), ": different elements");
        const long x = psi(w, group), y = psi(spelled, group);
        if (x == y) return std::nullopt;
        return describe(to_string(w), " vs ", to_string(spelled), ": psi ", x, " vs ", y);
      },
      o);
}

CheckResult check_linking(const TriangleGroup& group, int max_r, const VerifyOptions& o) {
  const WordEnumeration words(group, max_r, /*positive_only=*/true);
  const long defect = static_cast<long>(group.p()) * group.q() - group.p() - group.q();
  return dispatch("(pq-p-q) lk = sum(pq - q n_j - p m_j) for every key, r <= " + std::to_string(max_r),
                  words.size(),
                  [&](std::size_t i) -> std::optional<std::string> {
                    const CyclicKey key = cyclic_key(words[i], group);
                    const Rational lk = dehornoy_linking(key, group);
                    const long formula = rademacher_formula(key, group);
                    if (lk * defect == Rational(BigInt(formula))) return std::nullopt;
                    return describe(to_string(key), ": lk ", lk.get_str(), " formula ", formula);
                  },
                  o);
}

CheckResult check_u_exponent_count(const TriangleGroup& group, int max_r, const VerifyOptions& o) {
  const std::string name = "Psi = #{m_j = 1} - #{m_j = 2} on SL2(Z), r <= " + std::to_string(max_r);
  if (group.p() != 2 || group.q() != 3) return skipped(name, "only defined for (2,3)");
  const WordEnumeration words(group, max_r, /*positive_only=*/true);
  return dispatch(name, words.size(),
                  [&](std::size_t i) -> std::optional<std::string> {
                    const Word w = words[i];
                    long epsilon_sum = 0;
                    for (const auto& s : w.syllables)
                      if (s.generator == Generator::U) epsilon_sum += s.exponent == 1 ? 1 : -1;
                    const long got = rademacher_symbol(w, group);
                    if (got == epsilon_sum) return std::nullopt;
                    return describe(to_string(w), ": Psi ", got, ", sum of epsilons ", epsilon_sum);
                  },
                  o);
}

CheckResult check_roundtrip(const TriangleGroup& group, int max_syllables, const VerifyOptions& o) {
  const std::vector<Word> words = enumerate_normalized_words(group, max_syllables);
  return dispatch("matrix_to_word(word_to_matrix(w)) re-evaluates exactly, <= " + std::to_string(max_syllables) +
                      " syllables",
                  words.size(),
                  [&](std::size_t i) -> std::optional<std::string> {
                    const GroupMatrix m = word_to_matrix(words[i], group);
                    const Word back = matrix_to_word(m, group, max_syllables);
                    if (word_to_matrix(back, group) == m) return std::nullopt;
                    return describe(to_string(words[i]), " decomposed as ", to_string(back));
                  },
                  o);
}

CheckResult check_normalize(const TriangleGroup& group, const VerifyOptions& o) {
  return dispatch("normalize is idempotent and preserves the element; keys are rotation invariant", o.trials,
                  [&](std::size_t i) -> std::optional<std::string> {
                    std::mt19937_64 rng(trial_seed(o.seed, kNormalize, i));
                    Word w;
                    w.sign = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
                    const int len = std::uniform_int_distribution<int>(0, 6)(rng);
                    for (int k = 0; k < len; ++k) {
                      const bool s = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
                      const long top = 3L * (s ? group.p() : group.q());
                      w.syllables.push_back({s ? Generator::S : Generator::U,
                                             std::uniform_int_distribution<long>(0, top)(rng)});
                    }
                    const Word n = normalize(w, group);
                    if (!(normalize(n, group) == n)) return describe(to_string(w), ": normalize not idempotent");
                    if (!(word_to_matrix(n, group) == word_to_matrix(w, group)))
                      return describe(to_string(w), ": normalize changed the element");
                    if (n.syllables.size() >= 2) {
                      Word rotated = n;
                      std::rotate(rotated.syllables.begin(), rotated.syllables.begin() + 1, rotated.syllables.end());
                      std::optional<CyclicKey> k1, k2;
                      try {
                        k1 = cyclic_key(n, group);
                      } catch (const NotCyclicallyAlternating&) {
                      }
                      try {
                        k2 = cyclic_key(rotated, group);
                      } catch (const NotCyclicallyAlternating&) {
                      }
                      if (k1.has_value() != k2.has_value() || (k1 && !(*k1 == *k2)))
                        return describe(to_string(n), ": cyclic key changed under rotation");
                    }
                    return std::nullopt;
                  },
                  o);
}

SuiteReport run_verification(const TriangleGroup& group, Suite suite, const VerifyOptions& o) {
  SuiteReport report;
  auto& out = report.results;
  const bool all = suite == Suite::all;
  if (all || suite == Suite::lemmas) {
    out.push_back(check_power_consistency(group));
    out.push_back(check_chebyshev(group));
    out.push_back(check_generator_signs(group));
    out.push_back(check_sign_pattern(group, o.max_r, o));
  }
  if (all || suite == Suite::theorem) {
    out.push_back(check_theorem(group, o.max_r, o));
    out.push_back(check_generator_psi(group));
    out.push_back(check_conjugacy(group, o));
    out.push_back(check_psi_additivity(group, o));
    out.push_back(check_psi_word_independence(group, o));
    out.push_back(check_u_exponent_count(group, o.max_r, o));
  }
  if (all || suite == Suite::classical) out.push_back(check_classical(group, o.max_r, o));
  if (all || suite == Suite::cocycle) {
    out.push_back(check_sign_formula_forms());
    out.push_back(check_cocycle_identity(group, o));
    out.push_back(check_log_definition(group, o));
  }
  if (all || suite == Suite::linking) out.push_back(check_linking(group, o.max_r, o));
  if (all || suite == Suite::words) {
    out.push_back(check_normalize(group, o));
    out.push_back(check_roundtrip(group, o.roundtrip_syllables, o));
  }
  return report;
}

}  // namespace rademacher
