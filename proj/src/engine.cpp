#include "afschur/engine.hpp"

namespace afschur {

namespace {

// Accumulates scale * sum_t (a_{i,t} + 1) [A + E_{i,t} - E_{j,t}] into out.
// Only the t with a_{j,t} >= 1 contribute, so iterating the stored row
// class of j makes the sum finite by construction.
void accumulate_unit_product(AlgebraElement& out, const Rational& scale,
                             int i, long long j, const AffineMatrix& A) {
  const int n = A.period();
  const auto [jrow, jcol] = canonicalize(j, 0, n);
  const long long shift = -jcol;  // j = jrow + shift
  for (const auto& [pos, value] : A.entries()) {
    if (pos.first != jrow) continue;
    const long long t = pos.second + shift;
    const Rational coeff = scale * Rational(A.entry(i, t) + 1);
    const AffineMatrix next = A.sub_unit(j, t)->add_unit(i, t);
    out.add_term(next, coeff);
  }
}

}  // namespace

AlgebraElement mult_left_unit(const LeftUnitFactor& F, const AffineMatrix& A) {
  const int n = A.period();
  if (F.mu.size() != n)
    throw MismatchError("left factor period differs from matrix period");
  if (F.row < 1 || F.row > n || F.row == F.col)
    throw std::invalid_argument("left unit factor needs row in [1..n], col != row");
  if (F.degree() != A.sigma())
    throw MismatchError("left factor degree differs from sigma(A)");
  AlgebraElement out(n, A.sigma());
  const auto co = F.mu.bumped(F.col, 1);
  if (!(*co == A.row_sum())) return out;  // convolution orthogonality
  accumulate_unit_product(out, Rational(1), F.row, F.col, A);
  return out;
}

AlgebraElement mult_diag(const Composition& lambda, const AlgebraElement& x) {
  if (lambda.size() != x.period())
    throw MismatchError("composition length differs from period");
  AlgebraElement out(x.period(), x.degree());
  for (const auto& [A, c] : x.terms())
    if (A.row_sum() == lambda) out.add_term(A, c);
  return out;
}

AlgebraElement mult_by_diag(const AlgebraElement& x, const Composition& lambda) {
  if (lambda.size() != x.period())
    throw MismatchError("composition length differs from period");
  AlgebraElement out(x.period(), x.degree());
  for (const auto& [A, c] : x.terms())
    if (A.col_sum() == lambda) out.add_term(A, c);
  return out;
}

AlgebraElement mult_generator(const GeneratorSymbol& g, const AlgebraElement& x) {
  switch (g.kind) {
    case GeneratorSymbol::Kind::Diag:
      return mult_diag(*g.lambda, x);
    case GeneratorSymbol::Kind::Weight: {
      AlgebraElement out(x.period(), x.degree());
      for (const auto& [A, c] : x.terms()) {
        const Int w = A.row_sum().part(g.index);
        if (sgn(w) != 0) out.add_term(A, c * Rational(w));
      }
      return out;
    }
    case GeneratorSymbol::Kind::Unit: {
      AlgebraElement out(x.period(), x.degree());
      for (const auto& [A, c] : x.terms())
        accumulate_unit_product(out, c, g.row, g.col, A);
      return out;
    }
  }
  throw std::logic_error("unreachable generator kind");
}

AlgebraElement mult_generator_right(const AlgebraElement& x,
                                    const GeneratorSymbol& g) {
  return transpose_tau(
      mult_generator(g.transposed(x.period()), transpose_tau(x)));
}

AlgebraElement mult_bracket(long long h, long long k, const AffineMatrix& A,
                            const ExponentVector& j, const Int& r) {
  const int n = A.period();
  if (h == k) throw std::invalid_argument("mult_bracket needs h != k");
  if (!A.has_zero_diagonal())
    throw std::invalid_argument("mult_bracket needs a diagonal-free matrix");
  if (j.size() != n) throw MismatchError("exponent vector length differs from period");
  {
    // Shift both indices so h is canonical; every ingredient below is
    // periodic in the pair.
    const auto [hrow, kshift] = canonicalize(h, k, n);
    h = hrow;
    k = kshift;
  }
  AlgebraElement out(n, r);

  // sum over t not in {h, k} of (a_{h,t}+1) (A + E_{h,t} - E_{k,t})[j,r]
  {
    const auto [krow, kcol] = canonicalize(k, 0, n);
    const long long shift = -kcol;
    for (const auto& [pos, value] : A.entries()) {
      if (pos.first != krow) continue;
      const long long t = pos.second + shift;
      if (t == h || t == k) continue;
      const Rational coeff(A.entry(h, t) + 1);
      const AffineMatrix B = A.sub_unit(k, t)->add_unit(h, t);
      out += coeff * bracket_element(B, j, r);
    }
  }

  // sum over 0 <= t <= j_h of (-1)^t binom(j_h, t) (A - E_{k,h})[j + (1-t)e_h, r]
  if (const auto sub = A.sub_unit(k, h)) {
    const Int jh = j.at_mod(h);
    for (Int t = 0; t <= jh; ++t) {
      Rational coeff(binomial(jh, t));
      if (mpz_odd_p(t.get_mpz_t())) coeff = -coeff;
      out += coeff * bracket_element(*sub, j.bumped(h, 1 - t), r);
    }
  }

  // (a_{h,k}+1) sum over 0 <= t <= j_k of binom(j_k, t) (A + E_{h,k})[j - t e_k, r]
  {
    const Rational lead(A.entry(h, k) + 1);
    const AffineMatrix added = A.add_unit(h, k);
    const Int jk = j.at_mod(k);
    for (Int t = 0; t <= jk; ++t)
      out += lead * Rational(binomial(jk, t)) *
             bracket_element(added, j.bumped(k, -t), r);
  }
  return out;
}

AlgebraElement mult_zero_bracket(long long l, const AffineMatrix& A,
                                 const ExponentVector& j, const Int& r) {
  AlgebraElement out = bracket_element(A, j.bumped(l, 1), r);
  const Int row_total = A.row_sum().at_mod(l);
  if (sgn(row_total) != 0)
    out += Rational(row_total) * bracket_element(A, j, r);
  return out;
}

AlgebraElement transpose_tau(const AlgebraElement& x) {
  AlgebraElement out(x.period(), x.degree());
  for (const auto& [A, c] : x.terms()) out.add_term(A.transpose(), c);
  return out;
}

AlgebraElement word_product(const GeneratorWord& word, const AlgebraElement& seed) {
  AlgebraElement acc = seed;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    acc = mult_generator(*it, acc);
  return acc;
}

}  // namespace afschur
