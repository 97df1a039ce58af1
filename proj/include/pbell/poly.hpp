#ifndef PBELL_POLY_HPP
#define PBELL_POLY_HPP

#include <map>
#include <string>
#include <string_view>

#include "pbell/rational.hpp"

namespace pbell {

// Exponent pair of a monomial x^x_deg * y^y_deg.
struct Exponent {
  unsigned x_deg = 0;
  unsigned y_deg = 0;

  unsigned total() const { return x_deg + y_deg; }
  friend bool operator==(const Exponent &, const Exponent &) = default;
};

// Graded lexicographic order with x > y: higher total degree first, ties
// broken by higher x-degree.
struct GradedLexOrder {
  bool operator()(const Exponent &a, const Exponent &b) const {
    if (a.total() != b.total())
      return a.total() > b.total();
    return a.x_deg > b.x_deg;
  }
};

// Sparse polynomial in x and y over the rationals. Zero coefficients are
// never stored, so structural equality of the term maps is polynomial
// equality.
class BivarPoly {
public:
  using TermMap = std::map<Exponent, Rational, GradedLexOrder>;

  BivarPoly() = default;
  BivarPoly(const Rational &constant);
  BivarPoly(long constant) : BivarPoly(Rational(constant)) {}

  static BivarPoly monomial(const Rational &coeff, unsigned x_deg, unsigned y_deg);
  static BivarPoly x() { return monomial(1, 1, 0); }
  static BivarPoly y() { return monomial(1, 0, 1); }

  // Parses the output of to_string().
  static BivarPoly parse(std::string_view text);

  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(unsigned x_deg, unsigned y_deg) const;
  void add_term(const Exponent &e, const Rational &coeff);

  unsigned degree_x() const;
  unsigned degree_y() const;
  unsigned total_degree() const;

  BivarPoly &operator+=(const BivarPoly &o);
  BivarPoly &operator-=(const BivarPoly &o);
  BivarPoly &operator*=(const BivarPoly &o);
  BivarPoly &operator*=(const Rational &c);

  friend BivarPoly operator+(BivarPoly a, const BivarPoly &b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly &b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly &a, const BivarPoly &b);
  friend BivarPoly operator*(BivarPoly a, const Rational &c) { return a *= c; }
  friend BivarPoly operator*(const Rational &c, BivarPoly a) { return a *= c; }
  BivarPoly operator-() const;

  friend bool operator==(const BivarPoly &a, const BivarPoly &b) { return a.terms_ == b.terms_; }

  // Multiplies by x^dx * y^dy.
  BivarPoly shifted_degrees(unsigned dx, unsigned dy) const;

  Rational evaluate(const Rational &x0, const Rational &y0) const;
  // p(x0, y) and p(x, y0).
  BivarPoly at_x(const Rational &x0) const;
  BivarPoly at_y(const Rational &y0) const;
  // p(x + c, y), by exact binomial expansion.
  BivarPoly translate_x(const Rational &c) const;

  // Terms in graded lexicographic order, e.g. "1/4*x^2*y^2 - 1/4*x*y^2 + 1/2*x*y".
  std::string to_string() const;

private:
  TermMap terms_;
};

inline Rational poly_eval(const BivarPoly &p, const Rational &x0, const Rational &y0) {
  return p.evaluate(x0, y0);
}

} // namespace pbell

#endif // PBELL_POLY_HPP
