#include "pbell/stirling.hpp"

#include <tuple>

#include "pbell/combinatorics.hpp"
#include "pbell/memo.hpp"

namespace pbell {

namespace {

using StirlingKey = std::tuple<std::uint64_t, unsigned, unsigned, unsigned>;

MemoTable<StirlingKey, Rational> &stirling_memo() {
  static MemoTable<StirlingKey, Rational> memo;
  return memo;
}

} // namespace

Rational shifted_sum_moment(const MomentProvider &provider, unsigned j, unsigned n, unsigned r) {
  Rational sum;
  for (unsigned i = 0; i <= n; ++i)
    sum += Rational(binomial(n, i)) * pow(Rational(r), n - i) * sum_moment(provider, j, i);
  return sum;
}

Rational prob_stirling2(const MomentProvider &provider, unsigned n, unsigned k, unsigned r) {
  if (k > n)
    return 0;
  return stirling_memo().get_or_compute({provider.id(), n, k, r}, [&] {
    Rational sum;
    for (unsigned j = 0; j <= k; ++j) {
      Rational term = Rational(binomial(k, j)) * shifted_sum_moment(provider, j, n, r);
      if ((k - j) % 2)
        sum -= term;
      else
        sum += term;
    }
    return sum / Rational(factorial(k));
  });
}

Rational stirling2(unsigned n, unsigned k, unsigned r) { return prob_stirling2(*unit_provider(), n, k, r); }

} // namespace pbell
