#ifndef PBELL_MOMENTS_HPP
#define PBELL_MOMENTS_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pbell/distribution.hpp"
#include "pbell/rational.hpp"

namespace pbell {

// Source of the raw moments mu_n = E[Y^n] of a random variable Y.
//
// Implementations must be pure: moment(0) == 1 and repeated calls return
// the same value. Every provider carries a process-unique id that keys the
// memo tables of sum_moment, joint_moment and the Stirling tables.
class MomentProvider {
public:
  virtual ~MomentProvider() = default;
  MomentProvider(const MomentProvider &) = delete;
  MomentProvider &operator=(const MomentProvider &) = delete;

  virtual Rational moment(unsigned n) const = 0;
  virtual std::string name() const = 0;

  std::uint64_t id() const { return id_; }

protected:
  MomentProvider();

private:
  std::uint64_t id_;
};

using ProviderPtr = std::shared_ptr<const MomentProvider>;

ProviderPtr make_provider(const DistributionSpec &spec);
// Shared deterministic(1) provider; the classical (Y = 1) specialization.
const ProviderPtr &unit_provider();

// E[S_k^n] for S_k = Y_1 + ... + Y_k (i.i.d.), S_0 = 0, with 0^0 = 1.
Rational sum_moment(const MomentProvider &provider, unsigned k, unsigned n);

// E[S_k^a * prod_i Y_i^{l_i}] with k = l.size(). For k = 0 this is 0^a.
Rational joint_moment(const MomentProvider &provider, unsigned k, unsigned a,
                      std::span<const unsigned> l);

// E[(S_k + r)^a * prod_i Y_i^{l_i}].
Rational shifted_joint_moment(const MomentProvider &provider, unsigned a,
                              std::span<const unsigned> l, unsigned r);

// mu_0/0!, mu_1/1!, ..., mu_order/order!.
std::vector<Rational> egf_truncation(const MomentProvider &provider, unsigned order);

} // namespace pbell

#endif // PBELL_MOMENTS_HPP
