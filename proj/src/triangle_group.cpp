#include "rademacher/triangle_group.hpp"

#include <algorithm>
#include <ostream>

namespace rademacher {

GroupMatrix::GroupMatrix(AlgebraicReal a, AlgebraicReal b, AlgebraicReal c, AlgebraicReal d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  const AlgebraicReal det = a_ * d_ - b_ * c_;
  if (det != AlgebraicReal(det.context(), 1)) throw NotUnimodular("matrix determinant is not 1");
}

GroupMatrix::GroupMatrix(Trusted, AlgebraicReal a, AlgebraicReal b, AlgebraicReal c, AlgebraicReal d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

GroupMatrix GroupMatrix::identity(const ContextPtr& ctx) {
  return GroupMatrix(Trusted{}, AlgebraicReal(ctx, 1), AlgebraicReal(ctx), AlgebraicReal(ctx),
                     AlgebraicReal(ctx, 1));
}

GroupMatrix GroupMatrix::inverse() const { return GroupMatrix(Trusted{}, d_, -b_, -c_, a_); }

GroupMatrix operator*(const GroupMatrix& x, const GroupMatrix& y) {
  return GroupMatrix(GroupMatrix::Trusted{}, x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                     x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_);
}

GroupMatrix operator-(const GroupMatrix& x) {
  return GroupMatrix(GroupMatrix::Trusted{}, -x.a_, -x.b_, -x.c_, -x.d_);
}

GroupMatrix mul(const GroupMatrix& x, const GroupMatrix& y) { return x * y; }

int sgn(const GroupMatrix& g) {
  if (const int s = sign_of(g.c()); s != 0) return s;
  // c = 0 forces ad = 1, so d != 0
  return sign_of(g.d());
}

int trace_sign(const GroupMatrix& g) { return sign_of(g.trace()); }

bool is_trace_greater_than_two(const GroupMatrix& g) {
  return sign_of(g.trace() - AlgebraicReal(g.context(), 2)) > 0;
}

AlgebraicReal frobenius_norm2(const GroupMatrix& g) {
  return g.a() * g.a() + g.b() * g.b() + g.c() * g.c() + g.d() * g.d();
}

std::ostream& operator<<(std::ostream& os, const GroupMatrix& g) {
  auto entry = [&os](const AlgebraicReal& x) {
    if (auto r = x.to_rational()) {
      os << r->get_str();
      return;
    }
    os << static_cast<double>(to_long_double(x));
  };
  os << '(';
  entry(g.a());
  os << ", ";
  entry(g.b());
  os << "; ";
  entry(g.c());
  os << ", ";
  entry(g.d());
  return os << ')';
}

ChebyshevTable::ChebyshevTable(const ContextPtr& ctx) {
  const int top = std::max(ctx->p(), ctx->q()) + 1;
  auto build = [&](const AlgebraicReal& two_x, std::vector<AlgebraicReal>& out) {
    out.reserve(static_cast<std::size_t>(top) + 2);
    out.emplace_back(ctx, -1);  // C_{-1}
    out.emplace_back(ctx, 0);   // C_0
    for (int n = 0; n < top; ++n) {
      const std::size_t i = out.size();
      out.push_back(two_x * out[i - 1] - out[i - 2]);
    }
  };
  build(two_cos(ctx, ctx->q()), s_);  // 2s = 2cos(pi/p)
  build(two_cos(ctx, ctx->p()), u_);  // 2u = 2cos(pi/q)
}

TriangleGroup::TriangleGroup(int p, int q) : ctx_(make_context(p, q)), table_(ctx_) {
  // S^n = (-C_{n-1}, -C_n; C_n, C_{n+1}) at s, for 0 <= n <= p
  for (int n = 0; n <= p; ++n) {
    const auto& t = table_;
    powers_S_.emplace_back(-t.at_s(n - 1), -t.at_s(n), t.at_s(n), t.at_s(n + 1));
  }
  for (int n = p + 1; n < 2 * p; ++n) powers_S_.push_back(-powers_S_[n - p]);
  // U^m = (C_{m+1}, -C_m; C_m, -C_{m-1}) at u, for 0 <= m <= q
  for (int m = 0; m <= q; ++m) {
    const auto& t = table_;
    powers_U_.emplace_back(t.at_u(m + 1), -t.at_u(m), t.at_u(m), -t.at_u(m - 1));
  }
  for (int m = q + 1; m < 2 * q; ++m) powers_U_.push_back(-powers_U_[m - q]);
}

const GroupMatrix& TriangleGroup::power_S(long n) const {
  const long period = 2L * p();
  long idx = n % period;
  if (idx < 0) idx += period;
  return powers_S_[static_cast<std::size_t>(idx)];
}

const GroupMatrix& TriangleGroup::power_U(long m) const {
  const long period = 2L * q();
  long idx = m % period;
  if (idx < 0) idx += period;
  return powers_U_[static_cast<std::size_t>(idx)];
}

}  // namespace rademacher
