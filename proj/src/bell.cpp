#include "pbell/bell.hpp"

#include "pbell/combinatorics.hpp"
#include "pbell/stirling.hpp"

namespace pbell {

namespace {

using Series = std::vector<BivarPoly>;

Series truncated_product(const Series &a, const Series &b, unsigned order) {
  Series out(order + 1);
  for (unsigned i = 0; i <= order && i < a.size(); ++i) {
    if (a[i].is_zero())
      continue;
    for (unsigned j = 0; i + j <= order && j < b.size(); ++j)
      out[i + j] += a[i] * b[j];
  }
  return out;
}

} // namespace

const MomentProvider &BellFamily::law() const {
  return probabilistic && provider ? *provider : *unit_provider();
}

BivarPoly BellFamily::evaluate(unsigned n) const {
  return bivariate ? bell_bivariate(law(), n, r) : bell_univariate(law(), n, r);
}

BivarPoly bell_univariate(const MomentProvider &provider, unsigned n, unsigned r) {
  BivarPoly out;
  for (unsigned k = 0; k <= n; ++k)
    out.add_term({k, 0}, prob_stirling2(provider, n, k, r));
  return out;
}

BivarPoly bell_bivariate(const MomentProvider &provider, unsigned n, unsigned r) {
  BivarPoly out;
  for (unsigned k = 0; k <= n; ++k) {
    Rational s = prob_stirling2(provider, n, k, r);
    if (!s.is_zero())
      out += falling_factorial(k).shifted_degrees(0, k) * s;
  }
  return out;
}

BivarPoly scaled_limit(const MomentProvider &provider, unsigned n, unsigned r) {
  BivarPoly cleared;
  for (unsigned k = 0; k <= n; ++k) {
    Rational s = prob_stirling2(provider, n, k, r);
    if (!s.is_zero())
      cleared += homogenized_falling(k) * s;
  }
  return cleared.at_y(0);
}

std::vector<BivarPoly> gf_oracle(const MomentProvider &provider, unsigned n_max, unsigned x_int, unsigned r) {
  const std::vector<Rational> mgf = egf_truncation(provider, n_max);

  // base(t) = 1 + y (M(t) - 1); mu_0 = 1 so the constant term is 1.
  Series base(n_max + 1);
  base[0] = BivarPoly(1);
  for (unsigned n = 1; n <= n_max; ++n)
    base[n] = BivarPoly::monomial(mgf[n], 0, 1);

  Series power(n_max + 1);
  power[0] = BivarPoly(1);
  for (unsigned i = 0; i < x_int; ++i)
    power = truncated_product(power, base, n_max);

  Series exp_rt(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n)
    exp_rt[n] = BivarPoly(pow(Rational(r), n) / Rational(factorial(n)));
  Series product = truncated_product(power, exp_rt, n_max);

  for (unsigned n = 0; n <= n_max; ++n)
    product[n] *= Rational(factorial(n));
  return product;
}

} // namespace pbell
