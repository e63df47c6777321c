#pragma once

// Asai's 2-cocycle W(g1, g2) = (1/2 pi i)(log j(g1, g2 z) + log j(g2, z) - log j(g1 g2, z)),
// j((a, b; c, d), z) = cz + d, with the branch Im log in [-pi, pi).

#include <complex>

#include "rademacher/triangle_group.hpp"

namespace rademacher {

/// Exact W via (sgn g1 + sgn g2 - sgn g1g2 - sgn g1 sgn g2 sgn g1g2) / 4.
int asai_w(const GroupMatrix& g1, const GroupMatrix& g2);

/// W from the three signs sgn g1, sgn g2, sgn g1g2, arithmetic (quarter) form.
int asai_w_from_signs(int s1, int s2, int s12);
/// Same, three-case form: 1 if s1 = s2 = 1, s12 = -1; -1 if s1 = s2 = -1, s12 = 1; else 0.
int asai_w_case_form(int s1, int s2, int s12);

struct LogCocycle {
  int value = 0;
  /// Distance of the unrounded (1/2 pi i)(...) from the returned integer.
  double residual = 0.0;
  /// Some Im log j landed within 1e-9 of the branch cut.
  bool branch_warning = false;
};

inline const std::complex<double> kDefaultBasePoint{0.0, 1.0};
inline const std::complex<double> kPerturbedBasePoint{0.31, 1.07};

/// Floating evaluation of the logarithmic definition at base point z
/// (Im z > 0) with entries evaluated at precision_bits.
LogCocycle asai_w_from_log(const GroupMatrix& g1, const GroupMatrix& g2,
                           std::complex<double> base_point = kDefaultBasePoint, long precision_bits = 64);

/// asai_w_from_log at z = i, retried at z = 0.31 + 1.07i on a branch warning.
LogCocycle asai_w_from_log_retrying(const GroupMatrix& g1, const GroupMatrix& g2, long precision_bits = 64);

/// RADEMACHER_PRECISION_BITS if set to a value >= 53, otherwise 64.
long log_precision_from_env();

}  // namespace rademacher
