#pragma once

#include <random>
#include <utility>
#include <vector>

#include "rademacher/verify.hpp"

namespace test_support {

using namespace rademacher;

inline const std::vector<std::pair<int, int>> kGroups = {{2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}, {4, 5}};

inline Rational rat(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline Rational value_of(const AlgebraicReal& x) { return *x.to_rational(); }

/// Random element of the real subfield as a rational combination of 2cos(k pi/pq).
inline AlgebraicReal random_real(std::mt19937_64& rng, const ContextPtr& ctx, int terms = 4) {
  std::uniform_int_distribution<long> index(0, ctx->modulus_order() - 1);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  AlgebraicReal x = AlgebraicReal::from_rational(ctx, rat(num(rng), den(rng)));
  for (int i = 0; i < terms; ++i)
    x += AlgebraicReal::from_rational(ctx, rat(num(rng), den(rng))) * two_cos(ctx, index(rng));
  return x;
}

}  // namespace test_support
