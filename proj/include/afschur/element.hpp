#pragma once

#include <optional>
#include <string>
#include <vector>

#include "afschur/lattice.hpp"

namespace afschur {

// Exponent vector j of the bracket elements A[j, r]: n nonnegative
// integers, read periodically.
class ExponentVector {
 public:
  explicit ExponentVector(std::vector<Int> parts);
  static ExponentVector zero(int n);
  static ExponentVector unit(long long i, int n);  // e_i

  int size() const { return static_cast<int>(parts_.size()); }
  const Int& part(int i) const;  // 1-based
  const Int& at_mod(long long i) const;
  ExponentVector bumped(long long i, const Int& delta) const;

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.parts_ == b.parts_;
  }

 private:
  std::vector<Int> parts_;
};

// Finite rational linear combination of basis symbols [A]_1 of fixed
// (n, r).  Zero coefficients are never stored; terms are kept in the
// canonical matrix order so serialization is reproducible.
class AlgebraElement {
 public:
  AlgebraElement(int n, Int r);
  static AlgebraElement basis(const AffineMatrix& A);  // [A]_1

  int period() const { return n_; }
  const Int& degree() const { return r_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<AffineMatrix, Rational>& terms() const { return terms_; }
  Rational coeff(const AffineMatrix& A) const;

  void add_term(const AffineMatrix& A, const Rational& c);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rational& c);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    return a += b;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    return a -= b;
  }
  friend AlgebraElement operator*(const Rational& c, AlgebraElement a) {
    return a *= c;
  }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) {
    return !(a == b);
  }

 private:
  int n_;
  Int r_;
  std::map<AffineMatrix, Rational> terms_;
};

// All n-part compositions of m, in descending lexicographic order;
// empty when m < 0.
std::vector<Composition> enumerate_compositions(int n, const Int& m);

// A[j, r] = sum over lambda in Lambda(n, r - sigma(A)) of
// lambda^j [A + diag(lambda)]_1, with 0^0 = 1 in lambda^j.
// A must have zero diagonal.
AlgebraElement bracket_element(const AffineMatrix& A, const ExponentVector& j,
                               const Int& r);

// k_lambda = [diag(lambda)]_1; lambda must be a composition of r.
AlgebraElement idempotent(const Composition& lambda, const Int& r);

// Multiplicative identity: sum of k_lambda over Lambda(n, r).
AlgebraElement identity_element(int n, const Int& r);

// Generator vocabulary: unit generators e_{i,j} (covering e_i, f_i and the
// loop generators e_{i,i+mn}), diagonal idempotents k_lambda, and the
// weight elements h_i = 0[e_i, r].
struct GeneratorSymbol {
  enum class Kind { Unit, Diag, Weight };

  Kind kind = Kind::Weight;
  int row = 1;        // Unit: canonical row in [1..n]
  long long col = 0;  // Unit: column, col != row
  std::optional<Composition> lambda;  // Diag
  int index = 1;      // Weight: class in [1..n]

  static GeneratorSymbol e(int i, int n);  // E(i, i+1)
  static GeneratorSymbol f(int i, int n);  // E(i+1, i)
  // General e_{i,j}; a diagonal position (i == j after canonicalization)
  // degrades to the weight symbol h_i.
  static GeneratorSymbol unit(long long i, long long j, int n);
  static GeneratorSymbol k(Composition lam);
  static GeneratorSymbol h(long long i, int n);

  // Image under the anti-automorphism tau.
  GeneratorSymbol transposed(int n) const;

  std::string str() const;
};

AlgebraElement generator_element(const GeneratorSymbol& g, int n, const Int& r);

// Canonical text form: terms in matrix order, exact coefficients.
std::string matrix_str(const AffineMatrix& A);
std::string serialize(const AlgebraElement& x);

}  // namespace afschur
