#pragma once

#include "afschur/element.hpp"

namespace afschur {

// Left factor [E_{i,j} + diag(mu)] of the closed multiplication formula:
// row in [1..n], col != row, sigma = 1 + sigma(mu).
struct LeftUnitFactor {
  int row;
  long long col;
  Composition mu;

  Int degree() const { return 1 + mu.degree(); }
};

// [E_{i,j} + diag(mu)] * [A]: zero unless co of the factor equals ro(A);
// otherwise the sum over t of (a_{i,t} + 1) [A + E_{i,t} - E_{j,t}],
// restricted to the t with a_{j,t} >= 1 (all other terms vanish under the
// negative-entry convention).
AlgebraElement mult_left_unit(const LeftUnitFactor& F, const AffineMatrix& A);

// k_lambda * x  /  x * k_lambda: keep terms whose row (resp. column) sum
// equals lambda.
AlgebraElement mult_diag(const Composition& lambda, const AlgebraElement& x);
AlgebraElement mult_by_diag(const AlgebraElement& x, const Composition& lambda);

// g * x for any generator symbol, expanded term by term through the unit
// and diagonal rules above.
AlgebraElement mult_generator(const GeneratorSymbol& g, const AlgebraElement& x);

// x * g, derived through the anti-automorphism tau.
AlgebraElement mult_generator_right(const AlgebraElement& x,
                                    const GeneratorSymbol& g);

// E_{h,k}[0,r] * A[j,r] evaluated directly from the three-sum closed
// formula (h != k, A diagonal-free).  Independent of mult_generator; the
// two routes are cross-checked in the test suites.
AlgebraElement mult_bracket(long long h, long long k, const AffineMatrix& A,
                            const ExponentVector& j, const Int& r);

// 0[e_l, r] * A[j,r] = A[j + e_l, r] + (sum_s a_{l,s}) A[j,r].
AlgebraElement mult_zero_bracket(long long l, const AffineMatrix& A,
                                 const ExponentVector& j, const Int& r);

// Basis-level transpose [A] -> [tA]; an anti-automorphism of the algebra
// fixing the idempotents and swapping raising and lowering generators.
AlgebraElement transpose_tau(const AlgebraElement& x);

using GeneratorWord = std::vector<GeneratorSymbol>;

// Applies the word right to left onto the seed; with the identity as seed
// this evaluates the word as an algebra element.
AlgebraElement word_product(const GeneratorWord& word, const AlgebraElement& seed);

}  // namespace afschur
