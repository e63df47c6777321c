#include <cmath>
#include <numbers>

#include <doctest.h>

#include "support.hpp"

using namespace rademacher;
using test_support::rat;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> values) {
  std::vector<BigInt> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

long euler_phi(long n) {
  long count = 0;
  for (long k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
  return count;
}

// remainder of x^n - 1 modulo a monic polynomial
std::vector<BigInt> remainder_of_xn_minus_one(int n, const std::vector<BigInt>& divisor) {
  std::vector<BigInt> r(static_cast<std::size_t>(n + 1));
  r[0] = -1;
  r[n] = 1;
  const std::size_t dd = divisor.size() - 1;
  for (std::size_t i = r.size(); i-- > dd;) {
    const BigInt factor = r[i];
    if (factor == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) r[i - dd + j] -= factor * divisor[j];
  }
  r.resize(dd);
  return r;
}

long double float_value(const AlgebraicReal& x) {
  const int n = x.context()->p() * x.context()->q();
  long double sum = 0;
  const auto& num = x.numerators();
  for (std::size_t i = 0; i < num.size(); ++i)
    sum += num[i].get_d() * std::cos(std::numbers::pi_v<long double> * static_cast<long double>(i) / n);
  return sum / x.denominator().get_d();
}

}  // namespace

TEST_CASE("cyclotomic polynomials match known coefficient lists") {
  CHECK(cyclotomic_polynomial(12) == ints({1, 0, -1, 0, 1}));
  CHECK(cyclotomic_polynomial(24) == ints({1, 0, 0, 0, -1, 0, 0, 0, 1}));
  CHECK(cyclotomic_polynomial(30) == ints({1, 1, 0, -1, -1, -1, 0, 1, 1}));
  CHECK(cyclotomic_polynomial(20).size() == 9);
  CHECK(cyclotomic_polynomial(28).size() == 13);
  CHECK(cyclotomic_polynomial(40).size() == 17);
}

TEST_CASE("context degree is Euler phi of 2pq and the modulus divides x^2pq - 1") {
  for (auto [p, q] : test_support::kGroups) {
    const auto ctx = make_context(p, q);
    CAPTURE(p);
    CAPTURE(q);
    CHECK(ctx->modulus_order() == 2 * p * q);
    CHECK(ctx->degree() == euler_phi(2 * p * q));
    const auto& phi = ctx->cyclotomic_poly();
    CHECK(phi.back() == 1);
    for (const auto& c : remainder_of_xn_minus_one(2 * p * q, phi)) CHECK(c == 0);
  }
}

TEST_CASE("zeta is a root of the stored modulus") {
  for (auto [p, q] : test_support::kGroups) {
    const auto ctx = make_context(p, q);
    std::vector<BigInt> sum(static_cast<std::size_t>(ctx->degree()));
    const auto& phi = ctx->cyclotomic_poly();
    for (std::size_t i = 0; i < phi.size(); ++i) {
      const auto& power = ctx->zeta_power(static_cast<long>(i));
      for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += phi[i] * power[j];
    }
    for (const auto& c : sum) CHECK(c == 0);
  }
}

TEST_CASE("invalid contexts name the violated constraint") {
  CHECK_THROWS_WITH_AS(make_context(2, 4), doctest::Contains("coprime"), InvalidContext);
  CHECK_THROWS_AS(make_context(3, 2), InvalidContext);
  CHECK_THROWS_AS(make_context(3, 3), InvalidContext);
  CHECK_THROWS_AS(make_context(1, 3), InvalidContext);
  CHECK_THROWS_AS(make_context(0, 5), InvalidContext);
}

TEST_CASE("two_cos values with known closed forms") {
  const auto c23 = make_context(2, 3);
  CHECK(two_cos(c23, 0).to_rational() == Rational(2));
  CHECK(two_cos(c23, 6).to_rational() == Rational(-2));
  CHECK(two_cos(c23, 2).to_rational() == Rational(1));   // 2cos(pi/3)
  CHECK(two_cos(c23, 3).to_rational() == Rational(0));   // 2cos(pi/2)
  CHECK(two_cos(c23, 4).to_rational() == Rational(-1));  // 2cos(2pi/3)
  CHECK_FALSE(two_cos(c23, 1).to_rational());            // sqrt 3
  CHECK(two_cos(c23, 1) * two_cos(c23, 1) == AlgebraicReal(c23, 3));
  CHECK(two_cos(c23, 13) == two_cos(c23, 1));
  CHECK(two_cos(c23, -5) == two_cos(c23, 5));

  // golden ratio: phi^2 = phi + 1
  const auto c25 = make_context(2, 5);
  const auto phi = two_cos(c25, 2);
  CHECK(phi * phi == phi + AlgebraicReal(c25, 1));
}

TEST_CASE("product rule 2cos(a) 2cos(b) = 2cos(a+b) + 2cos(a-b)") {
  for (auto [p, q] : test_support::kGroups) {
    const auto ctx = make_context(p, q);
    const int n = ctx->modulus_order();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b <= a; ++b) {
        CAPTURE(a);
        CAPTURE(b);
        REQUIRE(two_cos(ctx, a) * two_cos(ctx, b) == two_cos(ctx, a + b) + two_cos(ctx, a - b));
      }
  }
}

TEST_CASE("ring laws on random real elements") {
  std::mt19937_64 rng(7);
  for (auto [p, q] : test_support::kGroups) {
    const auto ctx = make_context(p, q);
    const AlgebraicReal zero(ctx), one(ctx, 1);
    for (int trial = 0; trial < 40; ++trial) {
      const auto x = test_support::random_real(rng, ctx);
      const auto y = test_support::random_real(rng, ctx);
      const auto z = test_support::random_real(rng, ctx);
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x + zero == x);
      CHECK(x * one == x);
      CHECK((x - x).is_zero());
      CHECK(x + (-x) == zero);
      // products stay in the real subfield and survive a coefficient round trip
      const auto xy = x * y;
      CHECK(AlgebraicReal::from_coefficients(ctx, xy.coefficients()) == xy);
    }
  }
}

TEST_CASE("canonical form: equal values have equal representations") {
  const auto ctx = make_context(3, 5);
  const auto a = AlgebraicReal::from_rational(ctx, rat(1, 2)) * two_cos(ctx, 4);
  const auto b = AlgebraicReal::from_rational(ctx, rat(2, 4)) * two_cos(ctx, 4);
  CHECK(a == b);
  CHECK(a.numerators() == b.numerators());
  CHECK(a.denominator() == b.denominator());
  CHECK(AlgebraicReal(ctx, 0).is_zero());
  CHECK(AlgebraicReal(ctx).is_zero());
}

TEST_CASE("non-real coefficient vectors are rejected") {
  const auto ctx = make_context(2, 3);
  std::vector<Rational> zeta(static_cast<std::size_t>(ctx->degree()));
  zeta[1] = 1;
  CHECK_THROWS_AS(AlgebraicReal::from_coefficients(ctx, zeta), NotReal);
  zeta[1] = 0;
  zeta[0] = rat(5, 3);
  CHECK(AlgebraicReal::from_coefficients(ctx, zeta).to_rational() == rat(5, 3));
}

TEST_CASE("mixing contexts raises ContextMismatch") {
  const auto a = make_context(2, 3), b = make_context(2, 5);
  CHECK_THROWS_AS(AlgebraicReal(a, 1) + AlgebraicReal(b, 1), ContextMismatch);
  CHECK_THROWS_AS(AlgebraicReal(a, 1) * AlgebraicReal(b, 1), ContextMismatch);
  CHECK_THROWS_AS(AlgebraicReal(a, 1) == AlgebraicReal(b, 1), ContextMismatch);
  // contexts built separately for the same (p, q) are interchangeable
  CHECK(AlgebraicReal(make_context(3, 4), 2) == AlgebraicReal(make_context(3, 4), 2));
}

TEST_CASE("sign_of agrees with a float evaluation away from zero") {
  std::mt19937_64 rng(11);
  for (auto [p, q] : test_support::kGroups) {
    const auto ctx = make_context(p, q);
    for (int trial = 0; trial < 200; ++trial) {
      const auto x = test_support::random_real(rng, ctx, 6);
      const long double v = float_value(x);
      if (std::fabs(v) < 1e-6L) continue;
      CHECK(sign_of(x) == (v > 0 ? 1 : -1));
    }
  }
}

TEST_CASE("sign_of is exact on zero and on near-cancelling values") {
  const auto c25 = make_context(2, 5);
  const auto phi = two_cos(c25, 2);
  CHECK(sign_of(AlgebraicReal(c25)) == 0);
  CHECK(sign_of(phi * phi - phi - AlgebraicReal(c25, 1)) == 0);

  // F_n phi - F_{n+1} has sign (-1)^(n+1) and size about phi^-n
  BigInt f0 = 0, f1 = 1;
  for (int n = 1; n <= 120; ++n) {
    const auto x = AlgebraicReal::from_integer(c25, f1) * phi - AlgebraicReal::from_integer(c25, f0 + f1);
    CAPTURE(n);
    CHECK(sign_of(x) == (n % 2 ? 1 : -1));
    const BigInt next = f0 + f1;
    f0 = f1;
    f1 = next;
  }

  // sqrt 3 against 1732050807568877293527/10^21 and the next rational up
  const auto c23 = make_context(2, 3);
  const auto root3 = two_cos(c23, 1);
  const auto lo = AlgebraicReal::from_rational(c23, Rational(BigInt("1732050807568877293527"), BigInt("1000000000000000000000")));
  const auto hi = AlgebraicReal::from_rational(c23, Rational(BigInt("1732050807568877293528"), BigInt("1000000000000000000000")));
  CHECK(sign_of(root3 - lo) == 1);
  CHECK(sign_of(root3 - hi) == -1);
}

TEST_CASE("compare orders elements") {
  const auto ctx = make_context(3, 4);
  const auto s2 = two_cos(ctx, 4);  // 2cos(pi/3) = 1
  const auto u2 = two_cos(ctx, 3);  // 2cos(pi/4) = sqrt 2
  CHECK(compare(u2, s2) == std::strong_ordering::greater);
  CHECK(compare(s2, u2) == std::strong_ordering::less);
  CHECK(compare(u2, u2) == std::strong_ordering::equal);
  CHECK(compare(AlgebraicReal(ctx), two_cos(ctx, 12)) == std::strong_ordering::greater);
}

TEST_CASE("coefficient strings") {
  CHECK(coefficient_string(rat(-1, 2)) == "-1/2");
  CHECK(coefficient_string(rat(3)) == "3");
  CHECK(parse_coefficient("-7/14") == rat(-1, 2));
  CHECK(parse_coefficient("12") == rat(12));
  CHECK_THROWS_AS(parse_coefficient("1/0"), ParseError);
  CHECK_THROWS_AS(parse_coefficient("x"), ParseError);
  CHECK_THROWS_AS(parse_coefficient("1.5"), ParseError);
}
