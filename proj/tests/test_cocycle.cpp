#include <cstdlib>

#include <doctest.h>

#include "support.hpp"

using namespace rademacher;

TEST_CASE("quarter form of W on all sign triples") {
  // (s1, s2, s12) -> W
  const int table[8][4] = {{1, 1, 1, 0},    {1, 1, -1, 1},   {1, -1, 1, 0},  {1, -1, -1, 0},
                           {-1, 1, 1, 0},   {-1, 1, -1, 0},  {-1, -1, 1, -1}, {-1, -1, -1, 0}};
  for (const auto& row : table) {
    CAPTURE(row[0]);
    CAPTURE(row[1]);
    CAPTURE(row[2]);
    CHECK(asai_w_from_signs(row[0], row[1], row[2]) == row[3]);
    CHECK(asai_w_case_form(row[0], row[1], row[2]) == row[3]);
  }
}

TEST_CASE("W on generator powers") {
  for (auto [p, q] : test_support::kGroups) {
    const TriangleGroup g(p, q);
    const auto I = g.identity();
    CHECK(asai_w(I, g.generator_S()) == 0);
    CHECK(asai_w(g.generator_U(), I) == 0);
    CHECK(asai_w(I, -I) == 0);
    CHECK(asai_w(-I, -I) == -1);
    // W(S, S^n) = 1 exactly when the product wraps to sign -1
    for (int n = 1; n < p; ++n) CHECK(asai_w(g.generator_S(), g.power_S(n)) == (n == p - 1 ? 1 : 0));
    for (int m = 1; m < q; ++m) CHECK(asai_w(g.generator_U(), g.power_U(m)) == (m == q - 1 ? 1 : 0));
  }
}

TEST_CASE("W is a normalized 2-cocycle with values in {-1, 0, 1}") {
  std::mt19937_64 rng(12);
  for (auto [p, q] : test_support::kGroups) {
    const TriangleGroup g(p, q);
    for (int trial = 0; trial < 100; ++trial) {
      const auto a = word_to_matrix(random_word(rng, g, 5), g);
      const auto b = word_to_matrix(random_word(rng, g, 5), g);
      const auto c = word_to_matrix(random_word(rng, g, 5), g);
      const int w = asai_w(a, b);
      CHECK(std::abs(w) <= 1);
      CHECK(asai_w(a * b, c) + asai_w(a, b) == asai_w(a, b * c) + asai_w(b, c));
    }
  }
}

TEST_CASE("logarithmic definition agrees with the sign formula") {
  std::mt19937_64 rng(13);
  for (auto [p, q] : test_support::kGroups) {
    const TriangleGroup g(p, q);
    for (int trial = 0; trial < 40; ++trial) {
      const auto a = word_to_matrix(random_word(rng, g, 4), g);
      const auto b = word_to_matrix(random_word(rng, g, 4), g);
      const LogCocycle log_w = asai_w_from_log_retrying(a, b);
      CHECK(log_w.value == asai_w(a, b));
      CHECK(log_w.residual < 1e-6);
    }
  }
  const TriangleGroup g(2, 3);
  const LogCocycle ss = asai_w_from_log(g.generator_S(), g.generator_S());
  CHECK(ss.value == 1);
  CHECK_FALSE(ss.branch_warning);
  CHECK(ss.residual < 1e-12);
}

TEST_CASE("base points near the branch cut raise a warning and are retried") {
  const TriangleGroup g(2, 3);
  // j(U, z) = z, so z just above -1 sits on the cut of the principal logarithm
  const LogCocycle near_cut = asai_w_from_log(g.identity(), g.generator_U(), {-1.0, 1e-12});
  CHECK(near_cut.branch_warning);
  const LogCocycle retried = asai_w_from_log_retrying(g.identity(), g.generator_U());
  CHECK_FALSE(retried.branch_warning);
  CHECK(retried.value == 0);
  CHECK(asai_w_from_log(g.identity(), g.generator_U(), kPerturbedBasePoint).value == 0);

  CHECK_THROWS_AS(asai_w_from_log(g.identity(), g.identity(), {0.0, 0.0}), InvalidArgument);
  CHECK_THROWS_AS(asai_w_from_log(g.identity(), g.identity(), {1.0, -2.0}), InvalidArgument);
}

TEST_CASE("higher working precision gives the same value with a smaller residual") {
  const TriangleGroup g(4, 5);
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = word_to_matrix(random_word(rng, g, 6), g);
    const auto b = word_to_matrix(random_word(rng, g, 6), g);
    const auto low = asai_w_from_log_retrying(a, b, 64);
    const auto high = asai_w_from_log_retrying(a, b, 256);
    CHECK(low.value == high.value);
    CHECK(high.residual <= low.residual + 1e-15);
  }
}

TEST_CASE("precision is read from RADEMACHER_PRECISION_BITS") {
  ::unsetenv("RADEMACHER_PRECISION_BITS");
  CHECK(log_precision_from_env() == 64);
  ::setenv("RADEMACHER_PRECISION_BITS", "200", 1);
  CHECK(log_precision_from_env() == 200);
  ::setenv("RADEMACHER_PRECISION_BITS", "20", 1);
  CHECK(log_precision_from_env() == 64);
  ::setenv("RADEMACHER_PRECISION_BITS", "lots", 1);
  CHECK(log_precision_from_env() == 64);
  ::unsetenv("RADEMACHER_PRECISION_BITS");
}
