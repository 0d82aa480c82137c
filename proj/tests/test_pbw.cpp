#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "afschur/pbw.hpp"
#include "test_util.hpp"

using namespace afschur;
using namespace afschur::testutil;

TEST_CASE("pbw evaluation base cases") {
  // empty off-diagonal part: the idempotent itself
  CHECK(pbw_evaluate({AffineMatrix(2), comp({1, 1})}, true) ==
        idempotent(comp({1, 1}), Int(2)));

  // (E_{1,2}, (1,1)) at r=2: a single surviving term
  CHECK(pbw_evaluate({unit(1, 2, 2), comp({1, 1})}, true) ==
        basis(unit(1, 2, 2) + diag({1, 0})));

  // (E_{1,2}+E_{2,1}, (0,2)): leading term plus one lower term
  const AlgebraElement v =
      pbw_evaluate({unit(1, 2, 2) + unit(2, 1, 2), comp({0, 2})}, true);
  REQUIRE(v.terms().size() == 2);
  CHECK(v.coeff(unit(1, 2, 2) + unit(2, 1, 2)) == Rational(1));
  CHECK(v.coeff(diag({1, 1})) == Rational(1));
}

TEST_CASE("divided powers scale the evaluation") {
  const PBWMonomial M{unit(1, 2, 2).add_unit(1, 2), comp({0, 2})};
  CHECK(pbw_divisor(M) == 2);
  const AlgebraElement undivided = pbw_evaluate(M, false);
  const AlgebraElement divided = pbw_evaluate(M, true);
  CHECK(undivided == Rational(2) * divided);
}

TEST_CASE("monomial admissibility") {
  const PBWMonomial good{unit(1, 2, 2), comp({1, 1})};
  CHECK(good.admissible());
  CHECK(good.full_matrix() == unit(1, 2, 2) + diag({1, 0}));

  // sigma_vec(E12+E21) = (0,2), so lambda = (1,1) is degenerate
  const PBWMonomial degenerate{unit(1, 2, 2) + unit(2, 1, 2), comp({1, 1})};
  CHECK(!degenerate.admissible());
}

TEST_CASE("triangular expansion") {
  const TriangularReport lead_only = triangular_check(unit(1, 2, 2), comp({1, 1}));
  CHECK(lead_only.passed());
  CHECK(lead_only.leading == Rational(1));
  CHECK(lead_only.residual.is_zero());

  const TriangularReport diag_only = triangular_check(AffineMatrix(2), comp({2, 0}));
  CHECK(diag_only.passed());
  CHECK(diag_only.residual.is_zero());

  const TriangularReport mixed =
      triangular_check(unit(1, 2, 2) + unit(2, 1, 2), comp({0, 2}));
  CHECK(mixed.passed());
  CHECK(mixed.residual == basis(diag({1, 1})));

  // degenerate lambda: flagged, not asserted; the value is still lower
  const TriangularReport degenerate =
      triangular_check(unit(1, 2, 2) + unit(2, 1, 2), comp({1, 1}));
  CHECK(!degenerate.admissible);
  CHECK(!degenerate.passed());
  CHECK(degenerate.lower_ok);
  CHECK(degenerate.residual == Rational(2) * basis(diag({2, 0})));
}

TEST_CASE("normal form coordinates") {
  NormalForm nf(2, Int(2));

  const auto diag_coords = nf.coordinates(idempotent(comp({1, 1}), Int(2)));
  REQUIRE(diag_coords.size() == 1);
  CHECK(diag_coords.begin()->first.off_diag.is_zero());
  CHECK(diag_coords.begin()->first.lambda == comp({1, 1}));
  CHECK(diag_coords.begin()->second == Rational(1));

  const auto coords = nf.coordinates(basis(unit(1, 2, 2) + diag({1, 0})));
  REQUIRE(coords.size() == 1);
  CHECK(coords.begin()->first.off_diag == unit(1, 2, 2));
  CHECK(coords.begin()->first.lambda == comp({1, 1}));
  CHECK(coords.begin()->second == Rational(1));
}

TEST_CASE("normal form round trips over a banded enumeration") {
  NormalForm nf(2, Int(2));
  for (const AffineMatrix& A : enumerate_theta(2, Int(2), 2)) {
    const AlgebraElement x = basis(A);
    CHECK(nf.expand(nf.coordinates(x)) == x);
  }
}

TEST_CASE("normal form round trips on random elements") {
  NormalForm nf(2, Int(2));
  const auto pool = enumerate_theta(2, Int(2), 2);
  std::mt19937 rng(99);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int s = 0; s < 25; ++s) {
    AlgebraElement x(2, Int(2));
    for (int t = 0; t < 3; ++t) {
      const int c = coeff(rng);
      if (c != 0) x.add_term(pool[pick(rng)], Rational(c));
    }
    CHECK(nf.expand(nf.coordinates(x)) == x);
  }
}

TEST_CASE("coordinates after expand reproduce the coordinates") {
  NormalForm nf(2, Int(2));
  PBWCoordinates coords;
  coords.emplace(PBWMonomial{unit(1, 2, 2), comp({1, 1})}, Rational(Int(2), Int(3)));
  coords.emplace(PBWMonomial{unit(1, 2, 2) + unit(2, 1, 2), comp({0, 2})},
                 Rational(-1));
  coords.emplace(PBWMonomial{AffineMatrix(2), comp({2, 0})}, Rational(5));
  CHECK(nf.coordinates(nf.expand(coords)) == coords);
}

TEST_CASE("pbw coordinates of the identity are the idempotent monomials") {
  NormalForm nf(2, Int(2));
  const auto coords = nf.coordinates(identity_element(2, Int(2)));
  CHECK(coords.size() == enumerate_compositions(2, Int(2)).size());
  for (const auto& [M, c] : coords) {
    CHECK(M.off_diag.is_zero());
    CHECK(c == Rational(1));
  }
}

TEST_CASE("general product") {
  NormalForm nf(2, Int(2));
  const AlgebraElement one = identity_element(2, Int(2));
  const AlgebraElement y = bracket_element(unit(1, 2, 2), ExponentVector::zero(2), Int(2));

  CHECK(nf.product(one, y) == y);
  CHECK(nf.product(idempotent(comp({1, 1}), Int(2)), y) == mult_diag(comp({1, 1}), y));

  // restricted to generator-type left factors it agrees with mult_generator
  for (int i = 1; i <= 2; ++i)
    for (long long j = i - 2; j <= i + 2; ++j) {
      if (j == i) continue;
      const GeneratorSymbol g = GeneratorSymbol::unit(i, j, 2);
      CHECK(nf.product(generator_element(g, 2, Int(2)), y) == mult_generator(g, y));
    }
}

TEST_CASE("general product associativity on a fixed seeded triple set") {
  NormalForm nf(2, Int(2));
  const auto pool = enumerate_theta(2, Int(2), 2);
  std::mt19937 rng(2024);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  const auto random_element = [&] {
    AlgebraElement x(2, Int(2));
    for (int t = 0; t < 2; ++t) {
      const int c = coeff(rng);
      if (c != 0) x.add_term(pool[pick(rng)], Rational(c));
    }
    return x;
  };
  for (int s = 0; s < 10; ++s) {
    const AlgebraElement a = random_element();
    const AlgebraElement b = random_element();
    const AlgebraElement c = random_element();
    CHECK(nf.product(nf.product(a, b), c) == nf.product(a, nf.product(b, c)));
  }
}

TEST_CASE("theta enumeration") {
  const auto diag_only = enumerate_theta(2, Int(1), 0);
  REQUIRE(diag_only.size() == 2);
  CHECK(diag_only[0] == diag({1, 0}));
  CHECK(diag_only[1] == diag({0, 1}));

  // band 1 adds E_{1,0}, E_{1,2}, E_{2,1}, E_{2,3}
  const auto band_one = enumerate_theta(2, Int(1), 1);
  CHECK(band_one.size() == 6);
  const std::vector<AffineMatrix> expected = {unit(1, 0, 2), diag({1, 0}),
                                              unit(1, 2, 2), unit(2, 1, 2),
                                              diag({0, 1}), unit(2, 3, 2)};
  for (const AffineMatrix& A : expected)
    CHECK(std::count(band_one.begin(), band_one.end(), A) == 1);
}

TEST_CASE("theta enumeration count matches stars and bars") {
  for (const int n : {2, 3})
    for (const int r : {0, 1, 2, 3})
      for (const long long band : {0LL, 1LL, 2LL}) {
        const Int positions = Int(n) * make_int(2 * band + 1);
        const Int expected = binomial(positions + r - 1, Int(r));
        CHECK(Int(enumerate_theta(n, Int(r), band).size()) == expected);
      }
}

TEST_CASE("diagonal-free enumeration") {
  const auto pm = enumerate_theta_offdiag(2, Int(2), 2);
  const Int positions(2 * 4);  // 4 off-diagonal positions per row
  Int expected = 0;
  for (int s = 0; s <= 2; ++s) expected += binomial(positions + s - 1, Int(s));
  CHECK(Int(pm.size()) == expected);
  for (const AffineMatrix& A : pm) {
    CHECK(A.has_zero_diagonal());
    CHECK(A.sigma() <= 2);
  }
}
