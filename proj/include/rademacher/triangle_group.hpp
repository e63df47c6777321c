#pragma once

// Matrices of the triangle group generated by
//   S_p = (0, -1; 1, 2cos(pi/p)),   U_q = (2cos(pi/q), -1; 1, 0),
// with S_p^p = U_q^q = -I.

#include <iosfwd>
#include <vector>

#include "rademacher/exact_field.hpp"

namespace rademacher {

/// 2x2 matrix over the real subfield with determinant exactly 1.
class GroupMatrix {
 public:
  /// Throws NotUnimodular unless ad - bc = 1, ContextMismatch on mixed contexts.
  GroupMatrix(AlgebraicReal a, AlgebraicReal b, AlgebraicReal c, AlgebraicReal d);

  static GroupMatrix identity(const ContextPtr& ctx);

  const AlgebraicReal& a() const noexcept { return a_; }
  const AlgebraicReal& b() const noexcept { return b_; }
  const AlgebraicReal& c() const noexcept { return c_; }
  const AlgebraicReal& d() const noexcept { return d_; }
  const ContextPtr& context() const noexcept { return a_.context(); }

  AlgebraicReal trace() const { return a_ + d_; }
  /// Inverse (d, -b; -c, a).
  GroupMatrix inverse() const;

  friend GroupMatrix operator*(const GroupMatrix& x, const GroupMatrix& y);
  friend GroupMatrix operator-(const GroupMatrix& x);
  friend bool operator==(const GroupMatrix& x, const GroupMatrix& y) = default;

 private:
  struct Trusted {};
  GroupMatrix(Trusted, AlgebraicReal a, AlgebraicReal b, AlgebraicReal c, AlgebraicReal d);

  AlgebraicReal a_, b_, c_, d_;
};

GroupMatrix mul(const GroupMatrix& x, const GroupMatrix& y);

/// sgn c if c != 0, sgn d if c = 0.
int sgn(const GroupMatrix& g);
/// Exact sign of a + d.
int trace_sign(const GroupMatrix& g);
bool is_trace_greater_than_two(const GroupMatrix& g);

/// Squared Frobenius norm a^2 + b^2 + c^2 + d^2.
AlgebraicReal frobenius_norm2(const GroupMatrix& g);

std::ostream& operator<<(std::ostream& os, const GroupMatrix& g);

/// Chebyshev polynomials of the second kind at s = cos(pi/p) and u = cos(pi/q):
/// C_0 = 0, C_1 = 1, C_{n+1} = 2x C_n - C_{n-1}, extended backwards with C_{-1} = -1.
class ChebyshevTable {
 public:
  explicit ChebyshevTable(const ContextPtr& ctx);

  /// C_n(s) for n in [-1, max(p, q) + 1].
  const AlgebraicReal& at_s(int n) const { return s_.at(static_cast<std::size_t>(n + 1)); }
  /// C_n(u) for n in [-1, max(p, q) + 1].
  const AlgebraicReal& at_u(int n) const { return u_.at(static_cast<std::size_t>(n + 1)); }
  int max_index() const noexcept { return static_cast<int>(s_.size()) - 2; }

 private:
  std::vector<AlgebraicReal> s_;
  std::vector<AlgebraicReal> u_;
};

/// The group Gamma_{p,q}: cyclotomic context, generators and Chebyshev table.
/// Immutable after construction and safe to share between threads.
class TriangleGroup {
 public:
  TriangleGroup(int p, int q);

  int p() const noexcept { return ctx_->p(); }
  int q() const noexcept { return ctx_->q(); }
  const ContextPtr& context() const noexcept { return ctx_; }
  const ChebyshevTable& chebyshev() const noexcept { return table_; }

  const GroupMatrix& generator_S() const noexcept { return powers_S_[1]; }
  const GroupMatrix& generator_U() const noexcept { return powers_U_[1]; }
  /// S_p^n for any integer n, via the closed Chebyshev form and S_p^{2p} = I.
  const GroupMatrix& power_S(long n) const;
  /// U_q^m for any integer m, via the closed Chebyshev form and U_q^{2q} = I.
  const GroupMatrix& power_U(long m) const;

  GroupMatrix identity() const { return GroupMatrix::identity(ctx_); }

 private:
  ContextPtr ctx_;
  ChebyshevTable table_;
  std::vector<GroupMatrix> powers_S_;  // n in [0, 2p)
  std::vector<GroupMatrix> powers_U_;  // m in [0, 2q)
};

}  // namespace rademacher
