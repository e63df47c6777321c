#include "rademacher/cocycle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "mp_real.hpp"

namespace rademacher {

int asai_w_from_signs(int s1, int s2, int s12) {
  const int numerator = s1 + s2 - s12 - s1 * s2 * s12;
  return numerator / 4;
}

int asai_w_case_form(int s1, int s2, int s12) {
  if (s1 == 1 && s2 == 1 && s12 == -1) return 1;
  if (s1 == -1 && s2 == -1 && s12 == 1) return -1;
  return 0;
}

int asai_w(const GroupMatrix& g1, const GroupMatrix& g2) {
  return asai_w_from_signs(sgn(g1), sgn(g2), sgn(g1 * g2));
}

namespace {

using detail::MpReal;

struct Complex {
  MpReal re, im;
  explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
};

// c*z + d
Complex automorphy(const MpReal& c, const MpReal& d, const Complex& z, mpfr_prec_t prec) {
  Complex out(prec);
  mpfr_mul(out.re.get(), c.get(), z.re.get(), MPFR_RNDN);
  mpfr_add(out.re.get(), out.re.get(), d.get(), MPFR_RNDN);
  mpfr_mul(out.im.get(), c.get(), z.im.get(), MPFR_RNDN);
  return out;
}

struct Entries {
  MpReal a, b, c, d;
};

Entries evaluate(const GroupMatrix& g, mpfr_prec_t prec) {
  return {detail::evaluate(g.a(), prec), detail::evaluate(g.b(), prec), detail::evaluate(g.c(), prec),
          detail::evaluate(g.d(), prec)};
}

// (a z + b) / (c z + d)
Complex mobius(const Entries& g, const Complex& z, mpfr_prec_t prec) {
  Complex num = automorphy(g.a, g.b, z, prec);
  Complex den = automorphy(g.c, g.d, z, prec);
  MpReal norm(prec), t(prec);
  mpfr_sqr(norm.get(), den.re.get(), MPFR_RNDN);
  mpfr_sqr(t.get(), den.im.get(), MPFR_RNDN);
  mpfr_add(norm.get(), norm.get(), t.get(), MPFR_RNDN);
  Complex out(prec);
  // num * conj(den) / |den|^2
  mpfr_mul(out.re.get(), num.re.get(), den.re.get(), MPFR_RNDN);
  mpfr_mul(t.get(), num.im.get(), den.im.get(), MPFR_RNDN);
  mpfr_add(out.re.get(), out.re.get(), t.get(), MPFR_RNDN);
  mpfr_mul(out.im.get(), num.im.get(), den.re.get(), MPFR_RNDN);
  mpfr_mul(t.get(), num.re.get(), den.im.get(), MPFR_RNDN);
  mpfr_sub(out.im.get(), out.im.get(), t.get(), MPFR_RNDN);
  mpfr_div(out.re.get(), out.re.get(), norm.get(), MPFR_RNDN);
  mpfr_div(out.im.get(), out.im.get(), norm.get(), MPFR_RNDN);
  return out;
}

// log with Im in [-pi, pi). Adds the result times `weight` into (sum_re, sum_im).
void accumulate_log(const Complex& w, int weight, MpReal& sum_re, MpReal& sum_im, const MpReal& pi,
                    bool& warning, mpfr_prec_t prec) {
  MpReal modulus(prec), arg(prec);
  mpfr_hypot(modulus.get(), w.re.get(), w.im.get(), MPFR_RNDN);
  mpfr_log(modulus.get(), modulus.get(), MPFR_RNDN);
  if (mpfr_zero_p(w.im.get())) {
    // on the real axis: positive -> 0, negative -> -pi (the cut belongs to -pi)
    if (mpfr_sgn(w.re.get()) > 0)
      mpfr_set_zero(arg.get(), 1);
    else
      mpfr_neg(arg.get(), pi.get(), MPFR_RNDN);
  } else {
    mpfr_atan2(arg.get(), w.im.get(), w.re.get(), MPFR_RNDN);
    MpReal gap(prec);
    mpfr_abs(gap.get(), arg.get(), MPFR_RNDN);
    mpfr_sub(gap.get(), pi.get(), gap.get(), MPFR_RNDN);
    if (mpfr_cmp_d(gap.get(), 1e-9) < 0) warning = true;
  }
  if (weight > 0) {
    mpfr_add(sum_re.get(), sum_re.get(), modulus.get(), MPFR_RNDN);
    mpfr_add(sum_im.get(), sum_im.get(), arg.get(), MPFR_RNDN);
  } else {
    mpfr_sub(sum_re.get(), sum_re.get(), modulus.get(), MPFR_RNDN);
    mpfr_sub(sum_im.get(), sum_im.get(), arg.get(), MPFR_RNDN);
  }
}

}  // namespace

LogCocycle asai_w_from_log(const GroupMatrix& g1, const GroupMatrix& g2, std::complex<double> base_point,
                           long precision_bits) {
  if (!(base_point.imag() > 0.0)) throw InvalidArgument("base point must lie in the upper half-plane");
  if (!g1.context()->same_as(*g2.context())) throw ContextMismatch();
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_bits);

  const Entries e1 = evaluate(g1, prec);
  const Entries e2 = evaluate(g2, prec);
  const Entries e12 = evaluate(g1 * g2, prec);

  Complex z(prec);
  mpfr_set_d(z.re.get(), base_point.real(), MPFR_RNDN);
  mpfr_set_d(z.im.get(), base_point.imag(), MPFR_RNDN);
  const Complex moved = mobius(e2, z, prec);

  MpReal pi(prec), sum_re(prec), sum_im(prec);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  LogCocycle out;
  accumulate_log(automorphy(e1.c, e1.d, moved, prec), +1, sum_re, sum_im, pi, out.branch_warning, prec);
  accumulate_log(automorphy(e2.c, e2.d, z, prec), +1, sum_re, sum_im, pi, out.branch_warning, prec);
  accumulate_log(automorphy(e12.c, e12.d, z, prec), -1, sum_re, sum_im, pi, out.branch_warning, prec);

  // (re + i im) / (2 pi i) = im / (2 pi) - i re / (2 pi)
  const long double two_pi = 2.0L * mpfr_get_ld(pi.get(), MPFR_RNDN);
  const long double real_part = mpfr_get_ld(sum_im.get(), MPFR_RNDN) / two_pi;
  const long double imag_part = mpfr_get_ld(sum_re.get(), MPFR_RNDN) / two_pi;
  const long double rounded = std::nearbyint(real_part);
  out.value = static_cast<int>(rounded);
  out.residual = static_cast<double>(std::max(std::fabs(real_part - rounded), std::fabs(imag_part)));
  return out;
}

LogCocycle asai_w_from_log_retrying(const GroupMatrix& g1, const GroupMatrix& g2, long precision_bits) {
  LogCocycle first = asai_w_from_log(g1, g2, kDefaultBasePoint, precision_bits);
  if (!first.branch_warning) return first;
  return asai_w_from_log(g1, g2, kPerturbedBasePoint, precision_bits);
}

long log_precision_from_env() {
  if (const char* env = std::getenv("RADEMACHER_PRECISION_BITS")) {
    try {
      const long bits = std::stol(env);
      if (bits >= 53) return bits;
    } catch (const std::exception&) {
    }
  }
  return 64;
}

}  // namespace rademacher
