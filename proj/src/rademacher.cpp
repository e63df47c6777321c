#include "rademacher/rademacher.hpp"

#include <numeric>

namespace rademacher {

PsiAccumulator::PsiAccumulator(const TriangleGroup& group) : group_(&group), matrix_(group.identity()) {}

void PsiAccumulator::append(Generator letter) {
  const GroupMatrix& g = letter == Generator::S ? group_->generator_S() : group_->generator_U();
  const long base = letter == Generator::S ? -group_->q() : -group_->p();
  GroupMatrix next = matrix_ * g;
  const int next_sign = sgn(next);
  // sgn S_p = sgn U_q = +1 (lower-left entry 1)
  const int w = asai_w_from_signs(sign_, 1, next_sign);
  psi_ += base + 2L * group_->p() * group_->q() * w;
  matrix_ = std::move(next);
  sign_ = next_sign;
}

void PsiAccumulator::append(const Word& w) {
  if (w.sign < 0)
    for (int i = 0; i < group_->p(); ++i) append(Generator::S);
  for (const auto& syl : w.syllables) {
    const long period = 2L * (syl.generator == Generator::S ? group_->p() : group_->q());
    long count = syl.exponent % period;
    if (count < 0) count += period;
    for (long i = 0; i < count; ++i) append(syl.generator);
  }
}

SymbolValue evaluate_symbol(const Word& w, const TriangleGroup& group) {
  PsiAccumulator acc(group);
  acc.append(w);
  const int s = acc.matrix_sign();
  const int t = trace_sign(acc.matrix());
  const long pq = static_cast<long>(group.p()) * group.q();
  // (pq/2) * s * (1 - t), kept exact before dividing by 2
  const long twice = pq * s * (1 - t);
  if (twice % 2 != 0)
    throw NonIntegral("Psi is not an integer for word '" + to_string(w) + "' (pq/2 correction is a half)");
  return {acc.psi(), acc.psi() + twice / 2, s, t, acc.matrix()};
}

long psi(const Word& w, const TriangleGroup& group) {
  PsiAccumulator acc(group);
  acc.append(w);
  return acc.psi();
}

long rademacher_symbol(const Word& w, const TriangleGroup& group) { return evaluate_symbol(w, group).Psi; }

long rademacher_formula(const CyclicKey& key, const TriangleGroup& group) {
  const long p = group.p(), q = group.q();
  long total = 0;
  for (const auto& [n, m] : key.pairs) {
    if (n <= 0 || n >= p || m <= 0 || m >= q)
      throw InvalidArgument("key exponent pair (" + std::to_string(n) + "," + std::to_string(m) +
                            ") outside 0 < n < p, 0 < m < q");
    total += p * q - q * n - p * m;
  }
  return total;
}

Rational dehornoy_linking(const CyclicKey& key, const TriangleGroup& group) {
  const long p = group.p(), q = group.q();
  Rational sum = 0;
  for (const auto& [n, m] : key.pairs) {
    sum += (Rational(p, 2) - n) / p;
    sum += (Rational(q, 2) - m) / q;
  }
  Rational lk = Rational(p * q, p * q - p - q) * sum;
  lk.canonicalize();
  return lk;
}

Rational sawtooth(const Rational& x) {
  if (x.get_den() == 1) return 0;
  BigInt floor_x;
  mpz_fdiv_q(floor_x.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  Rational r = x - Rational(floor_x) - Rational(1, 2);
  r.canonicalize();
  return r;
}

Rational dedekind_sum(long a, long c) {
  if (c == 0) throw InvalidArgument("dedekind_sum: c must be nonzero");
  Rational sum = 0;
  const long bound = c < 0 ? -c : c;
  for (long k = 1; k < bound; ++k) {
    Rational x(k, c), y(BigInt(k) * a, c);
    x.canonicalize();
    y.canonicalize();
    sum += sawtooth(x) * sawtooth(y);
  }
  sum.canonicalize();
  return sum;
}

namespace {

int sign(const BigInt& x) { return sgn(x); }

long as_integer(const Rational& r, const char* what) {
  if (r.get_den() != 1 || !r.get_num().fits_slong_p()) throw NonIntegral(std::string(what) + " is not an integer");
  return r.get_num().get_si();
}

}  // namespace

long dedekind_phi(const IntMatrix& m) {
  const BigInt a = m.a, b = m.b, c = m.c, d = m.d;
  if (a * d - b * c != 1) throw NotUnimodular("dedekind_phi: determinant is not 1");
  if (c == 0) {
    Rational value(b, d);
    value.canonicalize();
    return as_integer(value, "Phi");
  }
  Rational value(a + d, c);
  value.canonicalize();
  value -= 12 * sign(c) * dedekind_sum(m.a, m.c);
  return as_integer(value, "Phi");
}

long rademacher_classical(const IntMatrix& m) {
  const BigInt product = BigInt(m.c) * (BigInt(m.a) + BigInt(m.d));
  return dedekind_phi(m) - 3 * sign(product);
}

std::optional<IntMatrix> to_integer_matrix(const GroupMatrix& g) {
  std::int64_t out[4];
  const AlgebraicReal* entries[4] = {&g.a(), &g.b(), &g.c(), &g.d()};
  for (int i = 0; i < 4; ++i) {
    auto r = entries[i]->to_rational();
    if (!r || r->get_den() != 1 || !r->get_num().fits_slong_p()) return std::nullopt;
    out[i] = r->get_num().get_si();
  }
  return IntMatrix{out[0], out[1], out[2], out[3]};
}

SymbolReport make_report(const Word& w, const TriangleGroup& group) {
  SymbolReport report;
  report.p = group.p();
  report.q = group.q();
  report.word = w;
  const SymbolValue value = evaluate_symbol(w, group);
  report.psi = value.psi;
  report.Psi_cocycle = value.Psi;
  report.trace_sign = value.trace_sign;

  try {
    report.key = cyclic_key(w, group);
  } catch (const NotCyclicallyAlternating&) {
  }
  if (report.key) {
    report.Psi_formula = rademacher_formula(*report.key, group);
    report.linking = dehornoy_linking(*report.key, group);
  }
  if (group.p() == 2 && group.q() == 3) {
    if (auto m = to_integer_matrix(value.matrix)) report.Psi_classical = rademacher_classical(*m);
  }

  const long pq_defect = static_cast<long>(group.p()) * group.q() - group.p() - group.q();
  bool ok = true;
  if (report.Psi_formula) ok = ok && *report.Psi_formula == report.Psi_cocycle;
  if (report.Psi_classical) ok = ok && *report.Psi_classical == report.Psi_cocycle;
  if (report.linking && report.Psi_formula) ok = ok && *report.linking * pq_defect == Rational(*report.Psi_formula);
  report.agreement = ok;
  return report;
}

}  // namespace rademacher
