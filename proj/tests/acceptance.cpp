// Acceptance run: one PASS/FAIL line per criterion over the CI groups.
// Exit status is the number of failed criteria (0 when all pass).

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "rademacher/verify.hpp"

namespace {

using namespace rademacher;
using Clock = std::chrono::steady_clock;

const std::vector<std::pair<int, int>> kGroups = {{2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}, {4, 5}};

struct Outcome {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  double seconds = 0;
  double slowest_group = 0;

  void add(const CheckResult& r, const std::string& where) {
    checks += r.checks;
    if (!r.passed())
      failures.push_back(where + " " + r.name + ": " + std::to_string(r.failures) + " failures, first: " +
                         r.first_counterexample.value_or("?"));
  }
};

std::string label(const TriangleGroup& g) { return "(" + std::to_string(g.p()) + "," + std::to_string(g.q()) + ")"; }

using Body = std::function<void(Outcome&)>;

/// Runs body once per CI group, timing each group.
Body per_group(std::function<void(const TriangleGroup&, Outcome&)> f) {
  return [f](Outcome& out) {
    for (auto [p, q] : kGroups) {
      const TriangleGroup g(p, q);
      const auto start = Clock::now();
      f(g, out);
      const double dt = std::chrono::duration<double>(Clock::now() - start).count();
      out.slowest_group = std::max(out.slowest_group, dt);
    }
  };
}

struct Criterion {
  int number;
  std::string title;
  Body body;
  double budget_seconds;  // 0: none
  bool per_group_budget = false;
};

}  // namespace

int main() {
  VerifyOptions parallel;
  parallel.seed = 1;
  parallel.max_r = 3;
  parallel.trials = 1000;
  parallel.log_pairs = 500;
  parallel.log_precision_bits = log_precision_from_env();
  VerifyOptions serial = parallel;
  serial.parallel = false;

  const std::vector<Criterion> criteria = {
      {1, "cocycle fold equals the closed formula, r <= 3, single-threaded",
       per_group([&](const TriangleGroup& g, Outcome& out) { out.add(check_theorem(g, 3, serial), label(g)); }), 60,
       true},
      {2, "SL2(Z): Psi equals Phi - 3 sgn(c(a+d)) by Dedekind sums, r <= 3",
       [&](Outcome& out) {
         const TriangleGroup g(2, 3);
         out.add(check_classical(g, 3, serial), label(g));
       },
       10},
      {3, "conjugacy and sign invariance, 1000 seeded trials per group",
       per_group([&](const TriangleGroup& g, Outcome& out) { out.add(check_conjugacy(g, parallel), label(g)); }), 120},
      {4, "2-cocycle identity and W in {-1,0,1}, 1000 seeded triples per group",
       [&](Outcome& out) {
         out.add(check_sign_formula_forms(), "");
         per_group([&](const TriangleGroup& g, Outcome& o) { o.add(check_cocycle_identity(g, parallel), label(g)); })(
             out);
       },
       0},
      {5, "logarithmic W at z = i matches, residual < 1e-6, 500 seeded pairs per group",
       per_group([&](const TriangleGroup& g, Outcome& out) { out.add(check_log_definition(g, parallel), label(g)); }),
       0},
      {6, "generator signs, Chebyshev positivity and entry sign patterns, r <= 3",
       per_group([&](const TriangleGroup& g, Outcome& out) {
         out.add(check_generator_signs(g), label(g));
         out.add(check_chebyshev(g), label(g));
         out.add(check_power_consistency(g), label(g));
         out.add(check_sign_pattern(g, 3, parallel), label(g));
       }),
       0},
      {7, "psi(S^n) = -nq, psi(U^m) = -mp, psi(-I) = pq",
       per_group([&](const TriangleGroup& g, Outcome& out) { out.add(check_generator_psi(g), label(g)); }), 0},
      {8, "(pq-p-q) lk equals the closed formula for every key, r <= 3; (2,3) ((1,1)) gives lk 1, Psi 1",
       [&](Outcome& out) {
         per_group([&](const TriangleGroup& g, Outcome& o) { o.add(check_linking(g, 3, parallel), label(g)); })(out);
         const TriangleGroup g(2, 3);
         const CyclicKey key{1, {{1, 1}}};
         const Rational lk = dehornoy_linking(key, g);
         const long psi_value = rademacher_symbol(parse_word("S U"), g);
         ++out.checks;
         if (lk != 1 || psi_value != 1 || rademacher_formula(key, g) != 1)
           out.failures.push_back("(2,3) ((1,1)): lk " + lk.get_str() + ", Psi " + std::to_string(psi_value));
       },
       0},
      {9, "SL2(Z): Psi = #{m_j = 1} - #{m_j = 2}, r <= 4",
       [&](Outcome& out) {
         const TriangleGroup g(2, 3);
         out.add(check_u_exponent_count(g, 4, parallel), label(g));
       },
       0},
      {10, "matrix_to_word(word_to_matrix(w)) is exact for all normalized words, <= 4 syllables",
       per_group([&](const TriangleGroup& g, Outcome& out) { out.add(check_roundtrip(g, 4, parallel), label(g)); }),
       300},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = Clock::now();
    try {
      c.body(out);
    } catch (const std::exception& e) {
      out.failures.push_back(std::string("exception: ") + e.what());
    }
    out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    const double measured = c.per_group_budget ? out.slowest_group : out.seconds;
    const bool in_time = c.budget_seconds == 0 || measured < c.budget_seconds;
    const bool ok = out.failures.empty() && out.checks > 0 && in_time;
    failed += !ok;
    std::printf("[%s] criterion %2d: %s (%zu checks, %.2f s)\n", ok ? "PASS" : "FAIL", c.number, c.title.c_str(),
                out.checks, out.seconds);
    for (const auto& f : out.failures) std::printf("       %s\n", f.c_str());
    if (!in_time)
      std::printf("       over the time budget: %.2f s >= %.0f s%s\n", measured, c.budget_seconds,
                  c.per_group_budget ? " for one group" : "");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
