#ifndef PBELL_RATIONAL_HPP
#define PBELL_RATIONAL_HPP

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pbell {

using Integer = mpz_class;

// Exact rational number, always held in lowest terms with a positive
// denominator.
class Rational {
public:
  Rational() = default;
  Rational(long value) : value_(value) {}
  Rational(const Integer &value) : value_(value) {}
  // Throws std::domain_error when den == 0.
  Rational(const Integer &num, const Integer &den);

  // Accepts "[-]digits" or "[-]digits/digits".
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational &operator+=(const Rational &o) { value_ += o.value_; return *this; }
  Rational &operator-=(const Rational &o) { value_ -= o.value_; return *this; }
  Rational &operator*=(const Rational &o) { value_ *= o.value_; return *this; }
  // Throws std::domain_error on division by zero.
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  // "num" or "num/den"; never a decimal.
  std::string to_string() const { return value_.get_str(); }

  const mpq_class &raw() const { return value_; }

private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}

  mpq_class value_;
};

// base^exp with 0^0 = 1.
Rational pow(const Rational &base, unsigned exp);
Integer pow(const Integer &base, unsigned exp);

} // namespace pbell

#endif // PBELL_RATIONAL_HPP
