#include "pbell/combinatorics.hpp"

#include <numeric>
#include <stdexcept>

namespace pbell {

Integer binomial(unsigned n, long k) {
  if (k < 0 || k > static_cast<long>(n))
    return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(k));
  return out;
}

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer multinomial(unsigned n, std::span<const unsigned> parts) {
  unsigned long sum = std::accumulate(parts.begin(), parts.end(), 0ul);
  if (sum != n)
    throw std::invalid_argument("multinomial: parts sum to " + std::to_string(sum) +
                                ", expected " + std::to_string(n));
  // Product of binomials avoids the large intermediate n!.
  Integer out = 1;
  unsigned remaining = n;
  for (unsigned p : parts) {
    out *= binomial(remaining, p);
    remaining -= p;
  }
  return out;
}

unsigned Composition::target() const {
  return std::accumulate(parts.begin(), parts.end(), 0u);
}

Compositions::iterator::iterator(unsigned n, unsigned k) : done_(false) {
  if (k == 0) {
    done_ = n != 0;
    return;
  }
  if (k > n) {
    done_ = true;
    return;
  }
  // Lexicographically smallest: 1, 1, ..., 1, n-k+1.
  current_.parts.assign(k, 1);
  current_.parts.back() = n - k + 1;
}

Compositions::iterator &Compositions::iterator::operator++() {
  auto &p = current_.parts;
  if (p.size() < 2) {
    done_ = true;
    return *this;
  }
  // Find the rightmost position (excluding the last) that can be bumped:
  // incrementing p[i] requires the tail to still hold at least one per slot.
  const std::size_t k = p.size();
  for (std::size_t i = k - 1; i-- > 0;) {
    unsigned tail = 0;
    for (std::size_t j = i + 1; j < k; ++j)
      tail += p[j];
    if (tail > k - 1 - i) {
      ++p[i];
      --tail;
      for (std::size_t j = i + 1; j + 1 < k; ++j)
        p[j] = 1;
      p[k - 1] = tail - static_cast<unsigned>(k - 2 - i);
      return *this;
    }
  }
  done_ = true;
  return *this;
}

BivarPoly falling_factorial(unsigned k) {
  BivarPoly out(1);
  for (unsigned j = 0; j < k; ++j)
    out *= BivarPoly::x() - BivarPoly(static_cast<long>(j));
  return out;
}

BivarPoly homogenized_falling(unsigned k) {
  BivarPoly out(1);
  for (unsigned j = 0; j < k; ++j)
    out *= BivarPoly::x() - BivarPoly::monomial(static_cast<long>(j), 0, 1);
  return out;
}

} // namespace pbell
