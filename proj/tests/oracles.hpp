// Brute-force reference computations used only by tests. None of these go
// through the library code paths they are used to check.
#ifndef PBELL_TESTS_ORACLES_HPP
#define PBELL_TESTS_ORACLES_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "pbell/distribution.hpp"
#include "pbell/poly.hpp"
#include "pbell/rational.hpp"

namespace oracle {

using pbell::BivarPoly;
using pbell::Integer;
using pbell::Rational;

// Pascal triangle rows 0..n_max.
inline std::vector<std::vector<Integer>> pascal(unsigned n_max) {
  std::vector<std::vector<Integer>> rows(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    rows[n].assign(n + 1, 1);
    for (unsigned k = 1; k < n; ++k)
      rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
  }
  return rows;
}

inline Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i)
    f *= i;
  return f;
}

// Counts set partitions of {0..n+r-1} into exactly k+r blocks with the
// first r elements in distinct blocks, by walking restricted growth
// strings. Result index is k.
inline std::vector<std::uint64_t> r_partition_counts(unsigned n, unsigned r) {
  std::vector<std::uint64_t> counts(n + 1, 0);
  std::vector<unsigned> rgs(n + r, 0);
  for (unsigned i = 0; i < r; ++i)
    rgs[i] = i;
  std::function<void(unsigned, unsigned)> walk = [&](unsigned pos, unsigned blocks) {
    if (pos == n + r) {
      if (blocks >= r)
        ++counts[blocks - r];
      return;
    }
    for (unsigned b = 0; b <= blocks; ++b) {
      rgs[pos] = b;
      walk(pos + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  walk(r, r);
  return counts;
}

inline std::uint64_t bell_number(unsigned n) {
  std::uint64_t total = 0;
  for (auto c : r_partition_counts(n, 0))
    total += c;
  return total;
}

// Classical triangle from {n,k} = {n-1,k-1} + k{n-1,k}.
inline std::vector<std::vector<Integer>> stirling_triangle(unsigned n_max) {
  std::vector<std::vector<Integer>> s(n_max + 1, std::vector<Integer>(n_max + 1, 0));
  s[0][0] = 1;
  for (unsigned n = 1; n <= n_max; ++n)
    for (unsigned k = 1; k <= n; ++k)
      s[n][k] = s[n - 1][k - 1] + Integer(k) * s[n - 1][k];
  return s;
}

// All k-tuples over {1..n} whose sum is n, by exhaustive product.
inline std::vector<std::vector<unsigned>> compositions_brute(unsigned n, unsigned k) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> t(k, 1);
  if (k == 0) {
    if (n == 0)
      out.push_back({});
    return out;
  }
  if (n == 0)
    return out;
  for (;;) {
    unsigned sum = 0;
    for (unsigned v : t)
      sum += v;
    if (sum == n)
      out.push_back(t);
    std::size_t i = 0;
    while (i < k && t[i] == n)
      t[i++] = 1;
    if (i == k)
      break;
    ++t[i];
  }
  return out;
}

// Atoms of a finite law as (value, probability) pairs. Deterministic and
// Bernoulli laws are finite too.
inline std::vector<std::pair<Rational, Rational>> atoms(const pbell::DistributionSpec &spec) {
  std::vector<std::pair<Rational, Rational>> out;
  const auto &law = spec.law();
  if (auto *d = std::get_if<pbell::Deterministic>(&law))
    out.push_back({d->value, 1});
  else if (auto *b = std::get_if<pbell::Bernoulli>(&law)) {
    out.push_back({1, b->p});
    out.push_back({0, Rational(1) - b->p});
  } else if (auto *f = std::get_if<pbell::FiniteDiscrete>(&law)) {
    for (const auto &a : f->atoms)
      out.push_back({a.value, a.probability});
  }
  return out;
}

// E[(S_k + shift)^a * prod Y_i^{l_i}] by summing over every outcome of
// (Y_1..Y_k) for a finite law.
inline Rational joint_expectation(const pbell::DistributionSpec &spec, unsigned a,
                                  const std::vector<unsigned> &l, unsigned shift = 0) {
  const auto law = atoms(spec);
  const unsigned k = static_cast<unsigned>(l.size());
  Rational total;
  std::vector<std::size_t> pick(k, 0);
  for (;;) {
    Rational prob = 1;
    Rational sum = shift;
    Rational prod = 1;
    for (unsigned i = 0; i < k; ++i) {
      const auto &[value, p] = law[pick[i]];
      prob *= p;
      sum += value;
      prod *= pbell::pow(value, l[i]);
    }
    total += prob * pbell::pow(sum, a) * prod;
    std::size_t i = 0;
    while (i < k && pick[i] + 1 == law.size())
      pick[i++] = 0;
    if (i == k)
      break;
    ++pick[i];
  }
  return total;
}

// Naive dense product of linear factors, independent of the library's
// falling-factorial builders: coefficients of prod_{j<k} (x - j) indexed by
// x-degree.
inline std::vector<Integer> falling_coeffs(unsigned k) {
  std::vector<Integer> c{1};
  for (unsigned j = 0; j < k; ++j) {
    std::vector<Integer> next(c.size() + 1, 0);
    for (std::size_t d = 0; d < c.size(); ++d) {
      next[d + 1] += c[d];
      next[d] -= Integer(j) * c[d];
    }
    c = next;
  }
  return c;
}

} // namespace oracle

#endif // PBELL_TESTS_ORACLES_HPP
