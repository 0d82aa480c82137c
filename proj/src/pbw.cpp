#include "afschur/pbw.hpp"

#include <algorithm>

namespace afschur {

bool PBWMonomial::admissible() const {
  const Composition sv = off_diag.sigma_vec();
  for (int i = 1; i <= lambda.size(); ++i)
    if (lambda.part(i) < sv.part(i)) return false;
  return true;
}

AffineMatrix PBWMonomial::full_matrix() const {
  const Composition sv = off_diag.sigma_vec();
  std::vector<Int> diag;
  diag.reserve(static_cast<size_t>(lambda.size()));
  for (int i = 1; i <= lambda.size(); ++i) diag.push_back(lambda.part(i) - sv.part(i));
  return off_diag + AffineMatrix::diagonal(Composition(std::move(diag)));
}

PBWMonomial PBWMonomial::of_basis(const AffineMatrix& B) {
  const auto split = B.split_pm();
  return {split.plus + split.minus, B.sigma_vec()};
}

GeneratorWord pbw_word(const PBWMonomial& M) {
  const int n = M.off_diag.period();
  const auto split = M.off_diag.split_pm();
  GeneratorWord word;
  for (const auto& [pos, value] : split.plus.entries())
    for (Int s = 0; s < value; ++s)
      word.push_back(GeneratorSymbol::unit(pos.first, pos.second, n));
  word.push_back(GeneratorSymbol::k(M.lambda));
  // L- runs through (row asc, col desc).
  std::vector<std::pair<Pos, Int>> lower(split.minus.entries().begin(),
                                         split.minus.entries().end());
  std::sort(lower.begin(), lower.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return a.first.first < b.first.first;
    return a.first.second > b.first.second;
  });
  for (const auto& [pos, value] : lower)
    for (Int s = 0; s < value; ++s)
      word.push_back(GeneratorSymbol::unit(pos.first, pos.second, n));
  return word;
}

Int pbw_divisor(const PBWMonomial& M) {
  Int out = 1;
  for (const auto& [pos, value] : M.off_diag.entries()) out *= factorial(value);
  return out;
}

AlgebraElement pbw_evaluate(const PBWMonomial& M, bool divided) {
  if (!M.off_diag.has_zero_diagonal())
    throw std::invalid_argument("PBW monomial needs a diagonal-free matrix");
  const int n = M.off_diag.period();
  const Int r = M.lambda.degree();
  AlgebraElement value = word_product(pbw_word(M), identity_element(n, r));
  if (divided) value *= Rational(Int(1), pbw_divisor(M));
  return value;
}

TriangularReport triangular_check(const AffineMatrix& A, const Composition& lambda) {
  const PBWMonomial M{A, lambda};
  const bool admissible = M.admissible();
  AlgebraElement value = pbw_evaluate(M, true);
  Rational leading(0);
  if (admissible) {
    const AffineMatrix lead = M.full_matrix();
    leading = value.coeff(lead);
    value.add_term(lead, -leading);
  }
  const Int off_weight = A.sigma();
  bool lower_ok = true;
  for (const auto& [B, c] : value.terms())
    if (B.off_diagonal_sigma() >= off_weight) lower_ok = false;
  return {admissible, leading, std::move(value), lower_ok};
}

NormalForm::NormalForm(int n, Int r) : n_(n), r_(std::move(r)) {
  if (n_ < 2) throw std::invalid_argument("period must be at least 2");
  if (sgn(r_) < 0) throw std::invalid_argument("degree must be nonnegative");
}

const PBWCoordinates& NormalForm::basis_coordinates(const AffineMatrix& B) {
  if (const auto it = memo_.find(B); it != memo_.end()) return it->second;
  const PBWMonomial M = PBWMonomial::of_basis(B);
  AlgebraElement residual = pbw_evaluate(M, true);
  if (!(residual.coeff(B) == Rational(1)))
    throw std::runtime_error("triangular expansion lost its leading term");
  residual.add_term(B, Rational(-1));

  PBWCoordinates coords;
  coords.emplace(M, Rational(1));
  const Int off_weight = B.off_diagonal_sigma();
  for (const auto& [C, c] : residual.terms()) {
    if (C.off_diagonal_sigma() >= off_weight)
      throw std::runtime_error("triangular expansion failed to decrease");
    for (const auto& [M2, c2] : basis_coordinates(C)) {
      auto [it, inserted] = coords.emplace(M2, -c * c2);
      if (!inserted) {
        it->second -= c * c2;
        if (it->second.is_zero()) coords.erase(it);
      }
    }
  }
  return memo_.emplace(B, std::move(coords)).first->second;
}

PBWCoordinates NormalForm::coordinates(const AlgebraElement& x) {
  if (x.period() != n_ || x.degree() != r_)
    throw MismatchError("element (n, r) differs from normal-form context");
  PBWCoordinates out;
  for (const auto& [B, c] : x.terms())
    for (const auto& [M, c2] : basis_coordinates(B)) {
      auto [it, inserted] = out.emplace(M, c * c2);
      if (!inserted) {
        it->second += c * c2;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  return out;
}

AlgebraElement NormalForm::expand(const PBWCoordinates& coords) const {
  AlgebraElement out(n_, r_);
  for (const auto& [M, c] : coords) out += c * pbw_evaluate(M, true);
  return out;
}

AlgebraElement NormalForm::product(const AlgebraElement& x, const AlgebraElement& y) {
  if (y.period() != n_ || y.degree() != r_)
    throw MismatchError("element (n, r) differs from normal-form context");
  AlgebraElement out(n_, r_);
  for (const auto& [M, c] : coordinates(x)) {
    AlgebraElement applied = word_product(pbw_word(M), y);
    applied *= c / Rational(pbw_divisor(M));
    out += applied;
  }
  return out;
}

namespace {

std::vector<Pos> band_positions(int n, long long band, bool include_diagonal) {
  std::vector<Pos> out;
  for (int i = 1; i <= n; ++i)
    for (long long j = i - band; j <= i + band; ++j) {
      if (!include_diagonal && j == i) continue;
      out.push_back({i, j});
    }
  return out;
}

void distribute(const std::vector<Pos>& positions, size_t index, const Int& left,
                std::vector<std::tuple<long long, long long, Int>>& acc, int n,
                std::vector<AffineMatrix>& out) {
  if (positions.empty()) {
    if (sgn(left) == 0) out.push_back(AffineMatrix(n));
    return;
  }
  if (index + 1 == positions.size()) {
    if (sgn(left) > 0)
      acc.emplace_back(positions[index].first, positions[index].second, left);
    out.push_back(AffineMatrix::from_entries(n, acc));
    if (sgn(left) > 0) acc.pop_back();
    return;
  }
  for (Int v = left; sgn(v) >= 0; --v) {
    if (sgn(v) > 0)
      acc.emplace_back(positions[index].first, positions[index].second, v);
    distribute(positions, index + 1, left - v, acc, n, out);
    if (sgn(v) > 0) acc.pop_back();
  }
}

}  // namespace

std::vector<AffineMatrix> enumerate_theta(int n, const Int& r, long long band) {
  if (band < 0) throw std::invalid_argument("band width must be nonnegative");
  std::vector<AffineMatrix> out;
  if (sgn(r) < 0) return out;
  const auto positions = band_positions(n, band, true);
  std::vector<std::tuple<long long, long long, Int>> acc;
  distribute(positions, 0, r, acc, n, out);
  return out;
}

std::vector<AffineMatrix> enumerate_theta_offdiag(int n, const Int& max_sigma,
                                                  long long band) {
  std::vector<AffineMatrix> out;
  const auto positions = band_positions(n, band, false);
  std::vector<std::tuple<long long, long long, Int>> acc;
  for (Int s = 0; s <= max_sigma; ++s) distribute(positions, 0, s, acc, n, out);
  return out;
}

}  // namespace afschur
