#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace credal {

/// Arbitrary-precision rational, always kept in canonical form
/// (gcd(num, den) = 1, den > 0). Equality and ordering are exact.
///
/// Thin value wrapper over GMP's mpq_class; the wrapper exists so that
/// construction always canonicalizes and so parsing/printing of the
/// project's input syntax ("3", "0.61", "61/100") lives in one place.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long numerator) : value_(numerator) {}  // NOLINT(runtime/explicit)
  Rational(long numerator, long denominator);
  explicit Rational(const mpq_class& value) : value_(value) {
    value_.canonicalize();
  }

  /// Accepts "a", "a/b", and decimal strings like "0.61" (exactly 61/100).
  /// Throws std::invalid_argument on malformed input.
  static Rational parse(std::string_view text);

  /// Exact conversion of a finite double (binary expansion).
  static Rational from_double(double value);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  double to_double() const { return value_.get_d(); }

  /// Canonical text form: "0", "1", "3/5", "-7/2".
  std::string to_string() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpq_class value_;
};

Rational abs(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace credal
