#include "afschur/numeric.hpp"

namespace afschur {

unsigned long checked_ulong(const Int& value) {
  if (sgn(value) < 0 || !value.fits_ulong_p())
    throw std::overflow_error("integer does not fit a machine word: " +
                              value.get_str());
  return value.get_ui();
}

Int factorial(const Int& k) {
  if (sgn(k) < 0) throw std::invalid_argument("factorial of negative integer");
  Int out;
  mpz_fac_ui(out.get_mpz_t(), checked_ulong(k));
  return out;
}

Int binomial(const Int& n, const Int& k) {
  if (sgn(k) < 0) return 0;
  Int out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), checked_ulong(k));
  return out;
}

Int int_pow(const Int& base, const Int& exp) {
  if (sgn(exp) < 0) throw std::invalid_argument("int_pow with negative exponent");
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), checked_ulong(exp));
  return out;
}

Rational::Rational(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw std::invalid_argument("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    const Int num(text.substr(0, slash));
    const Int den(text.substr(slash + 1));
    if (sgn(den) == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational literal '" + text + "'");
  }
}

std::string Rational::str() const { return q_.get_str(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("rational division by zero");
  q_ /= o.q_;
  return *this;
}

}  // namespace afschur
