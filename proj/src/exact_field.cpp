#include "rademacher/exact_field.hpp"

#include <cfloat>
#include <cmath>
#include <map>
#include <numeric>
#include <regex>
#include <stdexcept>
#include <utility>

#include "mp_real.hpp"

namespace rademacher {

namespace {

using Poly = std::vector<BigInt>;

// Exact quotient of a by a monic divisor b; throws if the remainder is nonzero.
Poly divide_exact(Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) throw std::logic_error("divide_exact: divisor degree too large");
  Poly quotient(a.size() - db);
  for (std::size_t k = a.size(); k-- > db;) {
    const BigInt c = a[k];
    quotient[k - db] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
  }
  for (const auto& r : a)
    if (r != 0) throw std::logic_error("divide_exact: nonzero remainder");
  return quotient;
}

void submul_small(mpz_ptr target, mpz_srcptr c, long s) {
  if (s > 0)
    mpz_submul_ui(target, c, static_cast<unsigned long>(s));
  else if (s < 0)
    mpz_addmul_ui(target, c, static_cast<unsigned long>(-s));
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  std::map<int, Poly> known;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    Poly xd(d + 1);
    xd[0] = -1;
    xd[d] = 1;
    for (auto& [e, phi_e] : known)
      if (d % e == 0) xd = divide_exact(std::move(xd), phi_e);
    known.emplace(d, std::move(xd));
  }
  return known.at(n);
}

ContextPtr make_context(int p, int q) {
  if (p < 2) throw InvalidContext("invalid (p, q): p must be at least 2");
  if (q <= p) throw InvalidContext("invalid (p, q): q must be greater than p");
  if (std::gcd(p, q) != 1) throw InvalidContext("invalid (p, q): p and q must be coprime");

  std::shared_ptr<CyclotomicContext> ctx(new CyclotomicContext());
  ctx->p_ = p;
  ctx->q_ = q;
  ctx->order_ = 2 * p * q;
  ctx->phi_ = cyclotomic_polynomial(ctx->order_);
  ctx->degree_ = static_cast<int>(ctx->phi_.size()) - 1;
  const int D = ctx->degree_;

  for (const auto& c : ctx->phi_) {
    if (!c.fits_slong_p()) throw std::logic_error("cyclotomic coefficient exceeds machine range");
    ctx->phi_small_.push_back(c.get_si());
  }

  ctx->powers_.reserve(ctx->order_);
  Poly current(D);
  current[0] = 1;
  for (int k = 0; k < ctx->order_; ++k) {
    ctx->powers_.push_back(current);
    // multiply by zeta: shift up, fold x^D back using Phi
    Poly next(D + 1);
    for (int i = 0; i < D; ++i) next[i + 1] = current[i];
    ctx->reduce(next);
    current = std::move(next);
  }

  ctx->cos_table_.resize(D);
  detail::MpReal pi(160), angle(160), value(160);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  for (int k = 0; k < D; ++k) {
    mpfr_mul_si(angle.get(), pi.get(), k, MPFR_RNDN);
    mpfr_div_si(angle.get(), angle.get(), p * q, MPFR_RNDN);
    mpfr_cos(value.get(), angle.get(), MPFR_RNDN);
    ctx->cos_table_[k] = mpfr_get_ld(value.get(), MPFR_RNDN);
  }
  return ctx;
}

const std::vector<BigInt>& CyclotomicContext::zeta_power(long k) const {
  long idx = k % order_;
  if (idx < 0) idx += order_;
  return powers_[static_cast<std::size_t>(idx)];
}

void CyclotomicContext::reduce(std::vector<BigInt>& poly) const {
  const std::size_t D = static_cast<std::size_t>(degree_);
  for (std::size_t k = poly.size(); k-- > D;) {
    if (poly[k] == 0) continue;
    // x^k = x^(k-D) * x^D and x^D = -(phi_0 + ... + phi_{D-1} x^(D-1))
    for (std::size_t i = 0; i < D; ++i)
      submul_small(poly[k - D + i].get_mpz_t(), poly[k].get_mpz_t(), phi_small_[i]);
    poly[k] = 0;
  }
  poly.resize(D);
}

AlgebraicReal::AlgebraicReal(ContextPtr ctx) : ctx_(std::move(ctx)), num_(ctx_->degree()) {}

AlgebraicReal::AlgebraicReal(ContextPtr ctx, long value) : AlgebraicReal(std::move(ctx)) {
  num_[0] = value;
}

AlgebraicReal::AlgebraicReal(ContextPtr ctx, std::vector<BigInt> num, BigInt den)
    : ctx_(std::move(ctx)), num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

AlgebraicReal AlgebraicReal::from_integer(ContextPtr ctx, const BigInt& value) {
  AlgebraicReal r(std::move(ctx));
  r.num_[0] = value;
  return r;
}

AlgebraicReal AlgebraicReal::from_rational(ContextPtr ctx, const Rational& value) {
  AlgebraicReal r(std::move(ctx));
  r.num_[0] = value.get_num();
  r.den_ = value.get_den();
  r.canonicalize();
  return r;
}

AlgebraicReal AlgebraicReal::from_coefficients(ContextPtr ctx, const std::vector<Rational>& coeffs) {
  BigInt common = 1;
  for (const auto& c : coeffs) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> num(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) num[i] = coeffs[i].get_num() * (common / coeffs[i].get_den());

  // conjugate: zeta^k -> zeta^-k, computed before reduction
  std::vector<BigInt> conj(ctx->degree());
  for (std::size_t k = 0; k < num.size(); ++k) {
    if (num[k] == 0) continue;
    const auto& image = ctx->zeta_power(-static_cast<long>(k));
    for (std::size_t i = 0; i < conj.size(); ++i)
      if (image[i] != 0) mpz_addmul(conj[i].get_mpz_t(), num[k].get_mpz_t(), image[i].get_mpz_t());
  }
  ctx->reduce(num);
  if (num != conj) throw NotReal("coefficient vector is not fixed by zeta -> zeta^-1");
  return AlgebraicReal(std::move(ctx), std::move(num), std::move(common));
}

std::vector<Rational> AlgebraicReal::coefficients() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (const auto& n : num_) {
    Rational r(n, den_);
    r.canonicalize();
    out.push_back(std::move(r));
  }
  return out;
}

bool AlgebraicReal::is_zero() const noexcept {
  for (const auto& n : num_)
    if (n != 0) return false;
  return true;
}

std::optional<Rational> AlgebraicReal::to_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return std::nullopt;
  Rational r(num_[0], den_);
  r.canonicalize();
  return r;
}

void AlgebraicReal::canonicalize() {
  if (den_ == 1) return;
  if (den_ < 0) {
    den_ = -den_;
    for (auto& n : num_) n = -n;
  }
  BigInt g = den_;
  for (const auto& n : num_) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  if (g == 1) return;
  for (auto& n : num_) mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

void AlgebraicReal::check_context(const AlgebraicReal& other) const {
  if (ctx_ != other.ctx_ && !ctx_->same_as(*other.ctx_)) throw ContextMismatch();
}

AlgebraicReal& AlgebraicReal::operator+=(const AlgebraicReal& rhs) {
  check_context(rhs);
  if (den_ == rhs.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += rhs.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * rhs.den_ + rhs.num_[i] * den_;
    den_ *= rhs.den_;
  }
  canonicalize();
  return *this;
}

AlgebraicReal& AlgebraicReal::operator-=(const AlgebraicReal& rhs) {
  check_context(rhs);
  if (den_ == rhs.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] -= rhs.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * rhs.den_ - rhs.num_[i] * den_;
    den_ *= rhs.den_;
  }
  canonicalize();
  return *this;
}

AlgebraicReal operator*(const AlgebraicReal& lhs, const AlgebraicReal& rhs) {
  lhs.check_context(rhs);
  const std::size_t D = lhs.num_.size();
  std::vector<BigInt> product(2 * D - 1);
  for (std::size_t i = 0; i < D; ++i) {
    if (lhs.num_[i] == 0) continue;
    for (std::size_t j = 0; j < D; ++j) {
      if (rhs.num_[j] == 0) continue;
      mpz_addmul(product[i + j].get_mpz_t(), lhs.num_[i].get_mpz_t(), rhs.num_[j].get_mpz_t());
    }
  }
  lhs.ctx_->reduce(product);
  return AlgebraicReal(lhs.ctx_, std::move(product), lhs.den_ * rhs.den_);
}

AlgebraicReal& AlgebraicReal::operator*=(const AlgebraicReal& rhs) { return *this = *this * rhs; }

AlgebraicReal operator-(AlgebraicReal x) {
  for (auto& n : x.num_) n = -n;
  return x;
}

bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) {
  a.check_context(b);
  return a.den_ == b.den_ && a.num_ == b.num_;
}

AlgebraicReal two_cos(const ContextPtr& ctx, long k) {
  const auto& plus = ctx->zeta_power(k);
  const auto& minus = ctx->zeta_power(-k);
  std::vector<BigInt> num(plus.size());
  for (std::size_t i = 0; i < num.size(); ++i) num[i] = plus[i] + minus[i];
  return AlgebraicReal(ctx, std::move(num), 1);
}

namespace {

// Rigorous evaluation at `prec` bits. Returns +1/-1 when the enclosure
// value +- bound excludes zero, 0 when undecided.
int sign_at_precision(const AlgebraicReal& x, mpfr_prec_t prec) {
  const auto& ctx = *x.context();
  const auto& num = x.numerators();
  const int D = ctx.degree();

  detail::MpReal pi(prec), angle(prec), term(prec), sum(prec), bound(prec), mass(prec);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  BigInt abs_mass = 0;
  for (int k = 0; k < D; ++k) {
    if (num[k] == 0) continue;
    abs_mass += abs(num[k]);
    mpfr_mul_si(angle.get(), pi.get(), k, MPFR_RNDN);
    mpfr_div_si(angle.get(), angle.get(), ctx.p() * ctx.q(), MPFR_RNDN);
    mpfr_cos(term.get(), angle.get(), MPFR_RNDN);
    mpfr_mul_z(term.get(), term.get(), num[k].get_mpz_t(), MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
  }
  // Each cos carries < 20 ulp-of-one error (rounded pi, angle ops, cos),
  // each product and partial sum one more relative ulp: error < mass*(D+32)*2^-prec,
  // doubled for margin.
  mpfr_set_z(mass.get(), abs_mass.get_mpz_t(), MPFR_RNDU);
  mpfr_mul_si(bound.get(), mass.get(), D + 32, MPFR_RNDU);
  mpfr_mul_2si(bound.get(), bound.get(), 1 - static_cast<long>(prec), MPFR_RNDU);
  mpfr_abs(term.get(), sum.get(), MPFR_RNDN);
  if (mpfr_cmp(term.get(), bound.get()) <= 0) return 0;
  return mpfr_sgn(sum.get()) > 0 ? 1 : -1;
}

// 64-bit round on the x87 extended type; cos_table is correctly rounded.
int sign_extended(const AlgebraicReal& x) {
  if constexpr (LDBL_MANT_DIG != 64) {
    return sign_at_precision(x, 64);
  } else {
    const auto& table = x.context()->cos_table();
    const auto& num = x.numerators();
    long double sum = 0.0L;
    long double mass = 0.0L;
    for (std::size_t k = 0; k < num.size(); ++k) {
      if (num[k] == 0) continue;
      if (!num[k].fits_slong_p()) return sign_at_precision(x, 64);
      const long double n = static_cast<long double>(num[k].get_si());
      sum += n * table[k];
      mass += std::fabs(n);
    }
    // table error <= 2^-64, D products and sums each add <= 2^-64 relative
    const long double bound =
        2.0L * mass * static_cast<long double>(num.size() + 8) * std::ldexp(1.0L, -64);
    if (std::fabs(sum) <= bound) return 0;
    return sum > 0 ? 1 : -1;
  }
}

}  // namespace

int sign_of(const AlgebraicReal& x) {
  if (x.is_zero()) return 0;
  // denominator is positive, so the sign is that of the numerator polynomial
  if (int s = sign_extended(x); s != 0) return s;
  for (mpfr_prec_t prec = 128; prec <= (mpfr_prec_t{1} << 24); prec *= 2)
    if (int s = sign_at_precision(x, prec); s != 0) return s;
  throw std::logic_error("sign_of: nonzero value not separated from zero");
}

std::strong_ordering compare(const AlgebraicReal& a, const AlgebraicReal& b) {
  const int s = sign_of(a - b);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace detail {

MpReal evaluate(const AlgebraicReal& x, mpfr_prec_t prec) {
  const auto& ctx = *x.context();
  const auto& num = x.numerators();
  const mpfr_prec_t work = prec + 32;
  MpReal pi(work), angle(work), term(work), sum(work);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  for (int k = 0; k < ctx.degree(); ++k) {
    if (num[k] == 0) continue;
    mpfr_mul_si(angle.get(), pi.get(), k, MPFR_RNDN);
    mpfr_div_si(angle.get(), angle.get(), ctx.p() * ctx.q(), MPFR_RNDN);
    mpfr_cos(term.get(), angle.get(), MPFR_RNDN);
    mpfr_mul_z(term.get(), term.get(), num[k].get_mpz_t(), MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
  }
  mpfr_div_z(sum.get(), sum.get(), x.denominator().get_mpz_t(), MPFR_RNDN);
  MpReal out(prec);
  mpfr_set(out.get(), sum.get(), MPFR_RNDN);
  return out;
}

}  // namespace detail

long double to_long_double(const AlgebraicReal& x) {
  return mpfr_get_ld(detail::evaluate(x, 64).get(), MPFR_RNDN);
}

std::string coefficient_string(const Rational& r) { return r.get_str(); }

Rational parse_coefficient(const std::string& text) {
  static const std::regex pattern(R"(-?[0-9]+(/[0-9]+)?)");
  if (!std::regex_match(text, pattern)) throw ParseError("malformed coefficient '" + text + "'", 0);
  Rational r(text, 10);
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + text + "'", text.find('/') + 1);
  r.canonicalize();
  return r;
}

}  // namespace rademacher
