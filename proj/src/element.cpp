#include "afschur/element.hpp"

#include <sstream>

namespace afschur {

ExponentVector::ExponentVector(std::vector<Int> parts) : parts_(std::move(parts)) {
  if (parts_.size() < 2)
    throw std::invalid_argument("exponent vector needs at least 2 parts");
  for (const Int& p : parts_)
    if (sgn(p) < 0)
      throw std::invalid_argument("exponent parts must be nonnegative");
}

ExponentVector ExponentVector::zero(int n) {
  return ExponentVector(std::vector<Int>(static_cast<size_t>(n), Int(0)));
}

ExponentVector ExponentVector::unit(long long i, int n) {
  auto parts = std::vector<Int>(static_cast<size_t>(n), Int(0));
  parts[static_cast<size_t>(column_class(i, n) - 1)] = 1;
  return ExponentVector(std::move(parts));
}

const Int& ExponentVector::part(int i) const {
  if (i < 1 || i > size()) throw std::out_of_range("exponent index");
  return parts_[static_cast<size_t>(i - 1)];
}

const Int& ExponentVector::at_mod(long long i) const {
  return parts_[static_cast<size_t>(column_class(i, size()) - 1)];
}

ExponentVector ExponentVector::bumped(long long i, const Int& delta) const {
  std::vector<Int> parts = parts_;
  parts[static_cast<size_t>(column_class(i, size()) - 1)] += delta;
  return ExponentVector(std::move(parts));
}

AlgebraElement::AlgebraElement(int n, Int r) : n_(n), r_(std::move(r)) {
  if (n_ < 2) throw std::invalid_argument("period must be at least 2");
  if (sgn(r_) < 0) throw std::invalid_argument("degree must be nonnegative");
}

AlgebraElement AlgebraElement::basis(const AffineMatrix& A) {
  AlgebraElement out(A.period(), A.sigma());
  out.terms_.emplace(A, Rational(1));
  return out;
}

Rational AlgebraElement::coeff(const AffineMatrix& A) const {
  const auto it = terms_.find(A);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const AffineMatrix& A, const Rational& c) {
  if (c.is_zero()) return;
  if (A.period() != n_)
    throw MismatchError("basis symbol period differs from element period");
  if (A.sigma() != r_)
    throw MismatchError("basis symbol weight differs from element degree");
  const auto [it, inserted] = terms_.emplace(A, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (n_ != o.n_ || r_ != o.r_)
    throw MismatchError("element addition across (n, r)");
  for (const auto& [A, c] : o.terms_) add_term(A, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (n_ != o.n_ || r_ != o.r_)
    throw MismatchError("element subtraction across (n, r)");
  for (const auto& [A, c] : o.terms_) add_term(A, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [A, coeff] : terms_) coeff *= c;
  return *this;
}

namespace {

void enumerate_rec(int slots_left, const Int& remaining, std::vector<Int>& acc,
                   std::vector<Composition>& out) {
  if (slots_left == 1) {
    acc.push_back(remaining);
    out.push_back(Composition(acc));
    acc.pop_back();
    return;
  }
  for (Int v = remaining; sgn(v) >= 0; --v) {
    acc.push_back(v);
    enumerate_rec(slots_left - 1, remaining - v, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Composition> enumerate_compositions(int n, const Int& m) {
  if (n < 2) throw std::invalid_argument("period must be at least 2");
  std::vector<Composition> out;
  if (sgn(m) < 0) return out;
  std::vector<Int> acc;
  acc.reserve(static_cast<size_t>(n));
  enumerate_rec(n, m, acc, out);
  return out;
}

AlgebraElement bracket_element(const AffineMatrix& A, const ExponentVector& j,
                               const Int& r) {
  if (!A.has_zero_diagonal())
    throw std::invalid_argument("bracket element needs a diagonal-free matrix");
  const int n = A.period();
  if (j.size() != n) throw MismatchError("exponent vector length differs from period");
  AlgebraElement out(n, r);
  const Int remaining = r - A.sigma();
  for (const Composition& lam : enumerate_compositions(n, remaining)) {
    Int weight = 1;
    for (int i = 1; i <= n; ++i) weight *= int_pow(lam.part(i), j.part(i));
    if (sgn(weight) != 0)
      out.add_term(A + AffineMatrix::diagonal(lam), Rational(weight));
  }
  return out;
}

AlgebraElement idempotent(const Composition& lambda, const Int& r) {
  if (lambda.degree() != r)
    throw MismatchError("idempotent composition does not sum to r");
  return AlgebraElement::basis(AffineMatrix::diagonal(lambda));
}

AlgebraElement identity_element(int n, const Int& r) {
  AlgebraElement out(n, r);
  for (const Composition& lam : enumerate_compositions(n, r))
    out += idempotent(lam, r);
  return out;
}

GeneratorSymbol GeneratorSymbol::e(int i, int n) { return unit(i, i + 1, n); }

GeneratorSymbol GeneratorSymbol::f(int i, int n) { return unit(i + 1, i, n); }

GeneratorSymbol GeneratorSymbol::unit(long long i, long long j, int n) {
  const Pos pos = canonicalize(i, j, n);
  if (pos.first == pos.second) return h(pos.first, n);
  GeneratorSymbol g;
  g.kind = Kind::Unit;
  g.row = pos.first;
  g.col = pos.second;
  return g;
}

GeneratorSymbol GeneratorSymbol::k(Composition lam) {
  GeneratorSymbol g;
  g.kind = Kind::Diag;
  g.lambda = std::move(lam);
  return g;
}

GeneratorSymbol GeneratorSymbol::h(long long i, int n) {
  GeneratorSymbol g;
  g.kind = Kind::Weight;
  g.index = column_class(i, n);
  return g;
}

GeneratorSymbol GeneratorSymbol::transposed(int n) const {
  if (kind == Kind::Unit) return unit(col, row, n);
  return *this;
}

std::string GeneratorSymbol::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Unit:
      os << "E(" << row << "," << col << ")";
      break;
    case Kind::Diag: {
      os << "k(";
      for (int i = 1; i <= lambda->size(); ++i)
        os << (i > 1 ? "," : "") << lambda->part(i).get_str();
      os << ")";
      break;
    }
    case Kind::Weight:
      os << "h" << index;
      break;
  }
  return os.str();
}

AlgebraElement generator_element(const GeneratorSymbol& g, int n, const Int& r) {
  switch (g.kind) {
    case GeneratorSymbol::Kind::Unit:
      return bracket_element(AffineMatrix::unit(g.row, g.col, n),
                             ExponentVector::zero(n), r);
    case GeneratorSymbol::Kind::Diag:
      if (g.lambda->size() != n)
        throw MismatchError("idempotent composition length differs from period");
      return idempotent(*g.lambda, r);
    case GeneratorSymbol::Kind::Weight: {
      AlgebraElement out(n, r);
      for (const Composition& lam : enumerate_compositions(n, r)) {
        const Int& w = lam.part(g.index);
        if (sgn(w) != 0)
          out.add_term(AffineMatrix::diagonal(lam), Rational(w));
      }
      return out;
    }
  }
  throw std::logic_error("unreachable generator kind");
}

std::string matrix_str(const AffineMatrix& A) {
  if (A.is_zero()) return "0";
  std::ostringstream off;
  std::vector<Int> diag(static_cast<size_t>(A.period()), Int(0));
  bool has_diag = false;
  bool first = true;
  for (const auto& [pos, value] : A.entries()) {
    if (pos.first == pos.second) {
      diag[static_cast<size_t>(pos.first - 1)] = value;
      has_diag = true;
      continue;
    }
    if (!first) off << "+";
    first = false;
    if (value != 1) off << value.get_str();
    off << "E(" << pos.first << "," << pos.second << ")";
  }
  std::ostringstream os;
  os << off.str();
  if (has_diag) {
    if (!first) os << "+";
    os << "D(";
    for (size_t i = 0; i < diag.size(); ++i)
      os << (i > 0 ? "," : "") << diag[i].get_str();
    os << ")";
  }
  return os.str();
}

std::string serialize(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [A, c] : x.terms()) {
    const Rational mag = c.sign() < 0 ? -c : c;
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    if (!(mag == Rational(1))) os << mag.str() << " ";
    os << "[" << matrix_str(A) << "]";
  }
  return os.str();
}

}  // namespace afschur
