#pragma once

// Rademacher symbols on Gamma_{p,q}.
//
//   psi(g1 g2) = psi(g1) + psi(g2) + 2pq W(g1, g2),  psi(S) = -q, psi(U) = -p
//   Psi(g)     = psi(g) + (pq/2) sgn(g) (1 - sgn tr g)
//
// plus the word formula, the classical Dedekind-sum route on SL2(Z), and the
// linking number with the (p, q) torus knot.

#include <cstdint>
#include <optional>

#include "rademacher/cocycle.hpp"
#include "rademacher/words.hpp"

namespace rademacher {

/// Running cocycle fold over single generator letters.
class PsiAccumulator {
 public:
  explicit PsiAccumulator(const TriangleGroup& group);

  void append(Generator letter);
  /// Appends every letter of w (a sign -1 contributes S^p).
  void append(const Word& w);

  long psi() const noexcept { return psi_; }
  const GroupMatrix& matrix() const noexcept { return matrix_; }
  /// sgn of the current matrix, kept in step with the fold.
  int matrix_sign() const noexcept { return sign_; }

 private:
  const TriangleGroup* group_;
  GroupMatrix matrix_;
  int sign_ = 1;
  long psi_ = 0;
};

struct SymbolValue {
  long psi;
  long Psi;
  int sgn;
  int trace_sign;
  GroupMatrix matrix;
};

/// psi and Psi of the element w denotes, by the cocycle fold.
SymbolValue evaluate_symbol(const Word& w, const TriangleGroup& group);

long psi(const Word& w, const TriangleGroup& group);
/// Psi via the cocycle fold. Throws NonIntegral if (pq/2) sgn (1 - sgn tr) leaves a half.
long rademacher_symbol(const Word& w, const TriangleGroup& group);

/// sum_j (pq - q n_j - p m_j). Throws InvalidArgument for exponents outside (0, p) x (0, q).
long rademacher_formula(const CyclicKey& key, const TriangleGroup& group);

/// (pq / (pq - p - q)) sum_j ((p/2 - n_j)/p + (q/2 - m_j)/q).
Rational dehornoy_linking(const CyclicKey& key, const TriangleGroup& group);

/// Sawtooth ((x)): x - floor(x) - 1/2 off the integers, 0 on them.
Rational sawtooth(const Rational& x);

/// sum_{k=1}^{|c|-1} ((k/c)) ((ka/c)). Throws InvalidArgument when c = 0.
Rational dedekind_sum(long a, long c);

struct IntMatrix {
  std::int64_t a, b, c, d;
};

/// Dedekind's Phi: (a + d)/c - 12 sgn(c) s(a, c) for c != 0, b/d for c = 0.
/// Throws NotUnimodular unless ad - bc = 1.
long dedekind_phi(const IntMatrix& m);
/// Phi(m) - 3 sgn(c (a + d)), with sgn 0 = 0.
long rademacher_classical(const IntMatrix& m);

/// Entries as machine integers when all four are rational integers.
std::optional<IntMatrix> to_integer_matrix(const GroupMatrix& g);

struct SymbolReport {
  int p = 0;
  int q = 0;
  Word word;
  long psi = 0;
  long Psi_cocycle = 0;
  std::optional<CyclicKey> key;
  std::optional<long> Psi_formula;
  std::optional<long> Psi_classical;
  int trace_sign = 0;
  std::optional<Rational> linking;
  bool agreement = true;
};

/// Evaluates every route that applies to w and records whether they agree.
SymbolReport make_report(const Word& w, const TriangleGroup& group);

}  // namespace rademacher
