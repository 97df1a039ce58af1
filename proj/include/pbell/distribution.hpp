#ifndef PBELL_DISTRIBUTION_HPP
#define PBELL_DISTRIBUTION_HPP

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "pbell/rational.hpp"

namespace pbell {

struct Deterministic {
  Rational value;
};

struct Bernoulli {
  Rational p;
};

struct FiniteDiscrete {
  struct Atom {
    Rational value;
    Rational probability;
  };
  std::vector<Atom> atoms;
};

struct Poisson {
  Rational rate;
};

// Validated description of a built-in law for Y.
//
// Text grammar:
//   det:<c> | bernoulli:<p> | discrete:(a1,p1);(a2,p2);... | poisson:<rate>
// where every number is an integer or num/den literal.
class DistributionSpec {
public:
  using Law = std::variant<Deterministic, Bernoulli, FiniteDiscrete, Poisson>;

  // Throws std::invalid_argument on a law that violates its constraints.
  explicit DistributionSpec(Law law);

  // Throws std::invalid_argument with a one-line diagnostic.
  static DistributionSpec parse(std::string_view text);

  const Law &law() const { return law_; }
  // Canonical text form; parse(to_string()) reproduces the spec.
  std::string to_string() const;

  friend bool operator==(const DistributionSpec &a, const DistributionSpec &b) {
    return a.to_string() == b.to_string();
  }

private:
  Law law_;
};

} // namespace pbell

#endif // PBELL_DISTRIBUTION_HPP
