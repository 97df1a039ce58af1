#ifndef PBELL_COMBINATORICS_HPP
#define PBELL_COMBINATORICS_HPP

#include <cstddef>
#include <iterator>
#include <span>
#include <vector>

#include "pbell/poly.hpp"
#include "pbell/rational.hpp"

namespace pbell {

// C(n, k); zero when k < 0 or k > n.
Integer binomial(unsigned n, long k);
Integer factorial(unsigned n);
// n! / prod(parts_i!). Throws std::invalid_argument unless the parts sum to n.
Integer multinomial(unsigned n, std::span<const unsigned> parts);

// Ordered tuple of positive parts.
struct Composition {
  std::vector<unsigned> parts;

  unsigned target() const;
  std::size_t length() const { return parts.size(); }
  friend bool operator==(const Composition &, const Composition &) = default;
};

// All compositions of n into exactly k positive parts, lexicographic.
// (0, 0) yields the single empty composition.
class Compositions {
public:
  Compositions(unsigned n, unsigned k) : n_(n), k_(k) {}

  class iterator {
  public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Composition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Composition *;
    using reference = const Composition &;

    iterator() = default;
    iterator(unsigned n, unsigned k);

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator &operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator &a, const iterator &b) { return a.done_ == b.done_; }

  private:
    Composition current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_, k_); }
  iterator end() const { return iterator(); }

  std::vector<Composition> to_vector() const { return {begin(), end()}; }

private:
  unsigned n_;
  unsigned k_;
};

inline Compositions compositions(unsigned n, unsigned k) { return {n, k}; }

// (x)_k = x(x-1)...(x-k+1); (x)_0 = 1.
BivarPoly falling_factorial(unsigned k);
// prod_{j<k} (x - j*y), i.e. (x/y)_k * y^k with the denominator cleared.
BivarPoly homogenized_falling(unsigned k);

} // namespace pbell

#endif // PBELL_COMBINATORICS_HPP
