#ifndef PBELL_BELL_HPP
#define PBELL_BELL_HPP

#include <vector>

#include "pbell/moments.hpp"
#include "pbell/poly.hpp"

namespace pbell {

// Selects one of the eight Bell families. A classical family is the
// probabilistic one with Y = 1.
struct BellFamily {
  bool probabilistic = true;
  bool bivariate = false;
  unsigned r = 0;
  ProviderPtr provider;

  // Resolves the provider: unit_provider() for classical families.
  const MomentProvider &law() const;
  BivarPoly evaluate(unsigned n) const;
};

// sum_k prob_stirling2(n, k, r) x^k
BivarPoly bell_univariate(const MomentProvider &provider, unsigned n, unsigned r = 0);

// sum_k prob_stirling2(n, k, r) (x)_k y^k
BivarPoly bell_bivariate(const MomentProvider &provider, unsigned n, unsigned r = 0);

// Replaces (x)_k y^k in bell_bivariate by prod_{j<k}(x - j y) and sets
// y = 0: the polynomial form of lim_{y->0} phi(x/y, y).
BivarPoly scaled_limit(const MomentProvider &provider, unsigned n, unsigned r = 0);

// Expands (1 + y(M(t) - 1))^x_int * e^{rt} to order t^n_max, M being the
// truncated moment generating function. Entry n is the coefficient of
// t^n/n!, a polynomial in y alone.
std::vector<BivarPoly> gf_oracle(const MomentProvider &provider, unsigned n_max, unsigned x_int,
                                 unsigned r = 0);

} // namespace pbell

#endif // PBELL_BELL_HPP
