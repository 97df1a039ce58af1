#ifndef PBELL_STIRLING_HPP
#define PBELL_STIRLING_HPP

#include "pbell/moments.hpp"
#include "pbell/rational.hpp"

namespace pbell {

// E[(S_j + r)^n], expanded binomially into sum_moment values.
Rational shifted_sum_moment(const MomentProvider &provider, unsigned j, unsigned n, unsigned r);

// Probabilistic r-Stirling number of the second kind,
//   (1/k!) sum_{j=0}^{k} C(k,j) (-1)^{k-j} E[(S_j + r)^n],
// zero for k > n. With r = 0 this is the plain probabilistic Stirling number.
Rational prob_stirling2(const MomentProvider &provider, unsigned n, unsigned k, unsigned r);

// Classical r-Stirling number {n+r, k+r}_r: the Y = 1 case of prob_stirling2.
Rational stirling2(unsigned n, unsigned k, unsigned r = 0);

} // namespace pbell

#endif // PBELL_STIRLING_HPP
