#pragma once

// Exact arithmetic in Z[zeta]/(Phi_{2pq}) restricted to the real subfield,
// zeta = exp(i*pi/(pq)) a primitive 2pq-th root of unity.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "rademacher/errors.hpp"

namespace rademacher {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Exact integer coefficients of the n-th cyclotomic polynomial in ascending
/// powers of x. Computed by exact division of x^n - 1 by Phi_d for every
/// proper divisor d of n.
std::vector<BigInt> cyclotomic_polynomial(int n);

/// Shared, immutable description of the ring Z[zeta] for a coprime pair (p, q).
class CyclotomicContext {
 public:
  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  /// 2pq, the multiplicative order of zeta.
  int modulus_order() const noexcept { return order_; }
  /// phi(2pq), the length of every canonical coefficient vector.
  int degree() const noexcept { return degree_; }
  /// Phi_{2pq} in ascending powers, monic, length degree() + 1.
  const std::vector<BigInt>& cyclotomic_poly() const noexcept { return phi_; }

  bool same_as(const CyclotomicContext& other) const noexcept {
    return p_ == other.p_ && q_ == other.q_;
  }

  /// Canonical integer coefficient vector of zeta^k for any integer k.
  const std::vector<BigInt>& zeta_power(long k) const;
  /// Reduces an integer polynomial of arbitrary length modulo Phi in place;
  /// on return the vector has length degree().
  void reduce(std::vector<BigInt>& poly) const;
  /// cos(k*pi/(pq)) for k in [0, degree), correctly rounded to long double.
  const std::vector<long double>& cos_table() const noexcept { return cos_table_; }

 private:
  friend std::shared_ptr<const CyclotomicContext> make_context(int p, int q);

  CyclotomicContext() = default;

  int p_ = 0;
  int q_ = 0;
  int order_ = 0;
  int degree_ = 0;
  std::vector<BigInt> phi_;
  std::vector<long> phi_small_;
  std::vector<std::vector<BigInt>> powers_;
  // cos(k*pi/(pq)) rounded to long double, k in [0, degree).
  std::vector<long double> cos_table_;
};

using ContextPtr = std::shared_ptr<const CyclotomicContext>;

/// Throws InvalidContext unless 2 <= p < q and gcd(p, q) = 1.
ContextPtr make_context(int p, int q);

/// A real element of Q(zeta), held as a canonical polynomial in zeta of degree
/// < phi(2pq). Storage is an integer numerator vector over one positive
/// denominator with gcd 1, so equal values have equal representations.
class AlgebraicReal {
 public:
  explicit AlgebraicReal(ContextPtr ctx);
  AlgebraicReal(ContextPtr ctx, long value);

  static AlgebraicReal from_integer(ContextPtr ctx, const BigInt& value);
  static AlgebraicReal from_rational(ContextPtr ctx, const Rational& value);
  /// Any-length coefficient vector in ascending powers of zeta. The vector is
  /// reduced modulo Phi_{2pq}; throws NotReal if the value is not real.
  static AlgebraicReal from_coefficients(ContextPtr ctx, const std::vector<Rational>& coeffs);

  const ContextPtr& context() const noexcept { return ctx_; }
  const std::vector<BigInt>& numerators() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }
  std::vector<Rational> coefficients() const;

  bool is_zero() const noexcept;
  /// The value as a rational number when it lies in Q.
  std::optional<Rational> to_rational() const;

  AlgebraicReal& operator+=(const AlgebraicReal& rhs);
  AlgebraicReal& operator-=(const AlgebraicReal& rhs);
  AlgebraicReal& operator*=(const AlgebraicReal& rhs);

  friend AlgebraicReal operator+(AlgebraicReal lhs, const AlgebraicReal& rhs) { return lhs += rhs; }
  friend AlgebraicReal operator-(AlgebraicReal lhs, const AlgebraicReal& rhs) { return lhs -= rhs; }
  friend AlgebraicReal operator*(const AlgebraicReal& lhs, const AlgebraicReal& rhs);
  friend AlgebraicReal operator-(AlgebraicReal x);

  friend bool operator==(const AlgebraicReal& a, const AlgebraicReal& b);

 private:
  friend AlgebraicReal two_cos(const ContextPtr& ctx, long k);

  AlgebraicReal(ContextPtr ctx, std::vector<BigInt> num, BigInt den);
  void canonicalize();
  void check_context(const AlgebraicReal& other) const;

  ContextPtr ctx_;
  std::vector<BigInt> num_;
  BigInt den_ = 1;
};

/// zeta^k + zeta^-k = 2 cos(k*pi/(pq)). two_cos(ctx, q) = 2cos(pi/p), two_cos(ctx, p) = 2cos(pi/q).
AlgebraicReal two_cos(const ContextPtr& ctx, long k);

/// Exact sign in {-1, 0, +1}. Zero is read off the canonical form; otherwise
/// the value is enclosed with a rigorous error bound at 64, 128, 256, ... bits
/// until the enclosure excludes zero.
int sign_of(const AlgebraicReal& x);

std::strong_ordering compare(const AlgebraicReal& a, const AlgebraicReal& b);

/// Floating approximation, for diagnostics and floating cross-checks only.
long double to_long_double(const AlgebraicReal& x);

/// Coefficient string: "n" for integers, "n/d" otherwise.
std::string coefficient_string(const Rational& r);
/// Inverse of coefficient_string; throws ParseError on malformed input.
Rational parse_coefficient(const std::string& text);

}  // namespace rademacher
