#include "pbell/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

#include "pbell/combinatorics.hpp"

namespace pbell {

BivarPoly::BivarPoly(const Rational &constant) {
  if (!constant.is_zero())
    terms_.emplace(Exponent{0, 0}, constant);
}

BivarPoly BivarPoly::monomial(const Rational &coeff, unsigned x_deg, unsigned y_deg) {
  BivarPoly p;
  p.add_term({x_deg, y_deg}, coeff);
  return p;
}

Rational BivarPoly::coefficient(unsigned x_deg, unsigned y_deg) const {
  auto it = terms_.find({x_deg, y_deg});
  return it == terms_.end() ? Rational() : it->second;
}

void BivarPoly::add_term(const Exponent &e, const Rational &coeff) {
  if (coeff.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (inserted)
    return;
  it->second += coeff;
  if (it->second.is_zero())
    terms_.erase(it);
}

unsigned BivarPoly::degree_x() const {
  unsigned d = 0;
  for (const auto &[e, c] : terms_)
    d = std::max(d, e.x_deg);
  return d;
}

unsigned BivarPoly::degree_y() const {
  unsigned d = 0;
  for (const auto &[e, c] : terms_)
    d = std::max(d, e.y_deg);
  return d;
}

unsigned BivarPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.total();
}

BivarPoly &BivarPoly::operator+=(const BivarPoly &o) {
  for (const auto &[e, c] : o.terms_)
    add_term(e, c);
  return *this;
}

BivarPoly &BivarPoly::operator-=(const BivarPoly &o) {
  for (const auto &[e, c] : o.terms_)
    add_term(e, -c);
  return *this;
}

BivarPoly operator*(const BivarPoly &a, const BivarPoly &b) {
  BivarPoly out;
  for (const auto &[ea, ca] : a.terms_)
    for (const auto &[eb, cb] : b.terms_)
      out.add_term({ea.x_deg + eb.x_deg, ea.y_deg + eb.y_deg}, ca * cb);
  return out;
}

BivarPoly &BivarPoly::operator*=(const BivarPoly &o) { return *this = *this * o; }

BivarPoly &BivarPoly::operator*=(const Rational &c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[e, coeff] : terms_)
    coeff *= c;
  return *this;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly out = *this;
  for (auto &[e, coeff] : out.terms_)
    coeff = -coeff;
  return out;
}

BivarPoly BivarPoly::shifted_degrees(unsigned dx, unsigned dy) const {
  BivarPoly out;
  for (const auto &[e, c] : terms_)
    out.terms_.emplace_hint(out.terms_.end(), Exponent{e.x_deg + dx, e.y_deg + dy}, c);
  return out;
}

Rational BivarPoly::evaluate(const Rational &x0, const Rational &y0) const {
  Rational sum;
  for (const auto &[e, c] : terms_)
    sum += c * pow(x0, e.x_deg) * pow(y0, e.y_deg);
  return sum;
}

BivarPoly BivarPoly::at_x(const Rational &x0) const {
  BivarPoly out;
  for (const auto &[e, c] : terms_)
    out.add_term({0, e.y_deg}, c * pow(x0, e.x_deg));
  return out;
}

BivarPoly BivarPoly::at_y(const Rational &y0) const {
  BivarPoly out;
  for (const auto &[e, c] : terms_)
    out.add_term({e.x_deg, 0}, c * pow(y0, e.y_deg));
  return out;
}

BivarPoly BivarPoly::translate_x(const Rational &c) const {
  if (c.is_zero())
    return *this;
  BivarPoly out;
  for (const auto &[e, coeff] : terms_) {
    // x^i -> sum_q C(i,q) x^q c^(i-q)
    for (unsigned q = 0; q <= e.x_deg; ++q)
      out.add_term({q, e.y_deg}, coeff * Rational(binomial(e.x_deg, q)) * pow(c, e.x_deg - q));
  }
  return out;
}

namespace {

void append_var(std::string &out, char var, unsigned deg) {
  if (deg == 0)
    return;
  if (!out.empty() && out.back() != ' ')
    out += '*';
  out += var;
  if (deg > 1)
    out += '^' + std::to_string(deg);
}

} // namespace

std::string BivarPoly::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[e, c] : terms_) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first)
      out += c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? " - " : " + ";
    std::string term;
    if (e.total() == 0 || mag != Rational(1))
      term = mag.to_string();
    append_var(term, 'x', e.x_deg);
    append_var(term, 'y', e.y_deg);
    out += term;
    first = false;
  }
  return out;
}

namespace {

[[noreturn]] void parse_fail(std::string_view text) {
  throw std::invalid_argument("malformed polynomial '" + std::string(text) + "'");
}

unsigned parse_power(std::string_view factor, std::string_view whole) {
  if (factor.size() == 1)
    return 1;
  if (factor.size() < 3 || factor[1] != '^')
    parse_fail(whole);
  unsigned deg = 0;
  for (char ch : factor.substr(2)) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      parse_fail(whole);
    deg = deg * 10 + static_cast<unsigned>(ch - '0');
  }
  return deg;
}

} // namespace

BivarPoly BivarPoly::parse(std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      compact += ch;
  if (compact.empty())
    parse_fail(text);

  BivarPoly out;
  std::size_t pos = 0;
  while (pos < compact.size()) {
    bool negative = false;
    if (compact[pos] == '+' || compact[pos] == '-') {
      negative = compact[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      parse_fail(text);
    }
    std::size_t end = compact.find_first_of("+-", pos);
    if (end == std::string::npos)
      end = compact.size();
    std::string_view term(compact.data() + pos, end - pos);
    if (term.empty())
      parse_fail(text);

    Rational coeff(1);
    Exponent e;
    std::size_t start = 0;
    while (start <= term.size()) {
      std::size_t star = term.find('*', start);
      if (star == std::string_view::npos)
        star = term.size();
      std::string_view factor = term.substr(start, star - start);
      if (factor.empty())
        parse_fail(text);
      if (factor.front() == 'x')
        e.x_deg += parse_power(factor, text);
      else if (factor.front() == 'y')
        e.y_deg += parse_power(factor, text);
      else
        coeff *= Rational::parse(factor);
      start = star + 1;
    }
    out.add_term(e, negative ? -coeff : coeff);
    pos = end;
  }
  return out;
}

} // namespace pbell
