#pragma once

#include "afschur/engine.hpp"

namespace afschur {

// PBW monomial (A, lambda): A diagonal-free, lambda a composition of r.
// It corresponds to the basis matrix A + diag(lambda - sigma_vec(A)) when
// that diagonal is nonnegative ("admissible").
//
// Position order, fixed once: L+ sorted by (row asc, col asc), L- by
// (row asc, col desc); the leftmost factor is the smallest position.
struct PBWMonomial {
  AffineMatrix off_diag;
  Composition lambda;

  bool admissible() const;
  AffineMatrix full_matrix() const;  // requires admissible()
  static PBWMonomial of_basis(const AffineMatrix& B);  // (B - diag, sigma_vec(B))

  friend bool operator==(const PBWMonomial& a, const PBWMonomial& b) {
    return a.off_diag == b.off_diag && a.lambda == b.lambda;
  }
  friend bool operator<(const PBWMonomial& a, const PBWMonomial& b) {
    if (!(a.off_diag == b.off_diag)) return a.off_diag < b.off_diag;
    return a.lambda < b.lambda;
  }
};

// The generator word prod+ e_{i,j}^{a_{i,j}} . k_lambda . prod- e_{i,j}^{a_{i,j}}
// in the fixed position order.
GeneratorWord pbw_word(const PBWMonomial& M);

// prod a_{i,j}! over the off-diagonal entries.
Int pbw_divisor(const PBWMonomial& M);

// Word evaluated on the identity; when divided, scaled by 1/pbw_divisor.
AlgebraElement pbw_evaluate(const PBWMonomial& M, bool divided);

// Divided evaluation of (A, lambda) checked against the triangular
// expansion: leading coefficient of [A + diag(lambda - sigma_vec(A))]
// exactly 1 and every residual [B] with sigma(B+ + B-) < sigma(A).
// Monomials with lambda - sigma_vec(A) negative are reported as
// degenerate (admissible = false) instead of checked.
struct TriangularReport {
  bool admissible = false;
  Rational leading;
  AlgebraElement residual;
  bool lower_ok = false;

  bool passed() const {
    return admissible && leading == Rational(1) && lower_ok;
  }
};
TriangularReport triangular_check(const AffineMatrix& A, const Composition& lambda);

using PBWCoordinates = std::map<PBWMonomial, Rational>;

// Normal-form context for one (n, r).  Coordinates are taken with respect
// to the divided monomials, computed by peeling sigma-maximal terms
// through the unitriangular expansion; expansions are memoized per basis
// symbol.  The memo is the only shared state: confine one instance to one
// thread.
class NormalForm {
 public:
  NormalForm(int n, Int r);

  PBWCoordinates coordinates(const AlgebraElement& x);
  AlgebraElement expand(const PBWCoordinates& coords) const;

  // x * y: normal-form x, then apply each monomial as a generator word
  // to y; bilinear extension.
  AlgebraElement product(const AlgebraElement& x, const AlgebraElement& y);

 private:
  const PBWCoordinates& basis_coordinates(const AffineMatrix& B);

  int n_;
  Int r_;
  std::map<AffineMatrix, PBWCoordinates> memo_;
};

// All A in Theta(n, r) with a_{i,j} = 0 unless |j - i| <= band, in a
// deterministic order.  Enumeration bound for test sweeps only; products
// never truncate.
std::vector<AffineMatrix> enumerate_theta(int n, const Int& r, long long band);

// Diagonal-free matrices with sigma <= max_sigma inside the band.
std::vector<AffineMatrix> enumerate_theta_offdiag(int n, const Int& max_sigma,
                                                  long long band);

}  // namespace afschur
