#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace afschur {

// Unbounded integer backing matrix entries, weights, exponents and
// coefficient arithmetic.  No floating point is used anywhere in the
// engine.
using Int = mpz_class;

// gmpxx has no long long constructor; this platform's long is as wide.
inline Int make_int(long long v) { return Int(static_cast<long>(v)); }

// Input that cannot be parsed (JSON documents, generator words,
// rational literals, self-inconsistent documents).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Values belonging to algebras with different (n, r) were combined, or
// an input disagrees with the configured (n, r).
struct MismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Conversion guard for loop bounds and library calls that take machine
// words.  Throws std::overflow_error instead of truncating.
unsigned long checked_ulong(const Int& value);

Int factorial(const Int& k);

// binomial(n, k); k < 0 yields 0.
Int binomial(const Int& n, const Int& k);

// base^exp for exp >= 0, with 0^0 = 1.
Int int_pow(const Int& base, const Int& exp);

// Exact rational, always reduced, denominator > 0.  Canonical zero is 0/1.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long value) : q_(value) {}  // NOLINT: implicit by design
  Rational(const Int& value) : q_(value) {}
  Rational(const Int& num, const Int& den);

  // Accepts "p" or "p/q" with optional leading '-'.
  static Rational parse(const std::string& text);

  Int num() const { return q_.get_num(); }
  Int den() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  std::string str() const;  // "p" or "p/q"

  Rational& operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational out;
    out.q_ = -a.q_;
    return out;
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.q_ < b.q_;
  }

 private:
  mpq_class q_;
};

}  // namespace afschur
