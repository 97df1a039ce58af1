#include "pbell/moments.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "pbell/combinatorics.hpp"
#include "pbell/memo.hpp"

namespace pbell {

namespace {

std::atomic<std::uint64_t> next_provider_id{1};

class DeterministicProvider final : public MomentProvider {
public:
  explicit DeterministicProvider(Rational c) : c_(std::move(c)) {}
  Rational moment(unsigned n) const override { return pow(c_, n); }
  std::string name() const override { return "det:" + c_.to_string(); }

private:
  Rational c_;
};

class BernoulliProvider final : public MomentProvider {
public:
  explicit BernoulliProvider(Rational p) : p_(std::move(p)) {}
  Rational moment(unsigned n) const override { return n == 0 ? Rational(1) : p_; }
  std::string name() const override { return "bernoulli:" + p_.to_string(); }

private:
  Rational p_;
};

class DiscreteProvider final : public MomentProvider {
public:
  explicit DiscreteProvider(FiniteDiscrete law) : law_(std::move(law)) {}
  Rational moment(unsigned n) const override {
    Rational sum;
    for (const auto &atom : law_.atoms)
      sum += atom.probability * pow(atom.value, n);
    return sum;
  }
  std::string name() const override { return DistributionSpec(law_).to_string(); }

private:
  FiniteDiscrete law_;
};

// mu_{n+1} = rate * sum_{k<=n} C(n,k) mu_k.
class PoissonProvider final : public MomentProvider {
public:
  explicit PoissonProvider(Rational rate) : rate_(std::move(rate)) { table_.push_back(1); }

  Rational moment(unsigned n) const override {
    std::lock_guard lock(mutex_);
    while (table_.size() <= n) {
      const unsigned m = static_cast<unsigned>(table_.size()) - 1;
      Rational sum;
      for (unsigned k = 0; k <= m; ++k)
        sum += Rational(binomial(m, k)) * table_[k];
      table_.push_back(rate_ * sum);
    }
    return table_[n];
  }
  std::string name() const override { return "poisson:" + rate_.to_string(); }

private:
  Rational rate_;
  mutable std::mutex mutex_;
  mutable std::vector<Rational> table_;
};

struct ProviderFactory {
  ProviderPtr operator()(const Deterministic &d) const { return std::make_shared<DeterministicProvider>(d.value); }
  ProviderPtr operator()(const Bernoulli &b) const { return std::make_shared<BernoulliProvider>(b.p); }
  ProviderPtr operator()(const FiniteDiscrete &d) const { return std::make_shared<DiscreteProvider>(d); }
  ProviderPtr operator()(const Poisson &p) const { return std::make_shared<PoissonProvider>(p.rate); }
};

MemoTable<std::tuple<std::uint64_t, unsigned, unsigned>, Rational> &sum_moment_memo() {
  static MemoTable<std::tuple<std::uint64_t, unsigned, unsigned>, Rational> memo;
  return memo;
}

using JointKey = std::tuple<std::uint64_t, unsigned, std::vector<unsigned>>;

MemoTable<JointKey, Rational> &joint_moment_memo() {
  static MemoTable<JointKey, Rational> memo;
  return memo;
}

// Sums multinomial(a; a_1..a_k) * prod mu_{a_i + l_i} over all weak
// compositions (a_1..a_k) of a, assigning slots left to right.
void expand_joint(const MomentProvider &provider, std::span<const unsigned> l, std::size_t slot,
                  unsigned remaining, const Integer &coeff, const Rational &product, Rational &sum) {
  if (slot + 1 == l.size()) {
    sum += Rational(coeff) * product * provider.moment(remaining + l[slot]);
    return;
  }
  for (unsigned take = 0; take <= remaining; ++take) {
    Rational next = product * provider.moment(take + l[slot]);
    if (next.is_zero())
      continue;
    expand_joint(provider, l, slot + 1, remaining - take, coeff * binomial(remaining, take), next, sum);
  }
}

} // namespace

MomentProvider::MomentProvider() : id_(next_provider_id.fetch_add(1)) {}

ProviderPtr make_provider(const DistributionSpec &spec) { return std::visit(ProviderFactory{}, spec.law()); }

const ProviderPtr &unit_provider() {
  static const ProviderPtr unit = make_provider(DistributionSpec(Deterministic{1}));
  return unit;
}

Rational sum_moment(const MomentProvider &provider, unsigned k, unsigned n) {
  if (k == 0)
    return n == 0 ? Rational(1) : Rational(0);
  if (n == 0)
    return 1;
  return sum_moment_memo().get_or_compute({provider.id(), k, n}, [&] {
    // E[S_k^n] = sum_j C(n,j) mu_j E[S_{k-1}^{n-j}]
    Rational sum;
    for (unsigned j = 0; j <= n; ++j)
      sum += Rational(binomial(n, j)) * provider.moment(j) * sum_moment(provider, k - 1, n - j);
    return sum;
  });
}

Rational joint_moment(const MomentProvider &provider, unsigned k, unsigned a, std::span<const unsigned> l) {
  if (l.size() != k)
    throw std::invalid_argument("joint_moment: exponent list has length " + std::to_string(l.size()) +
                                ", expected " + std::to_string(k));
  if (k == 0)
    return a == 0 ? Rational(1) : Rational(0);
  JointKey key{provider.id(), a, std::vector<unsigned>(l.begin(), l.end())};
  return joint_moment_memo().get_or_compute(key, [&] {
    Rational sum;
    expand_joint(provider, l, 0, a, Integer(1), Rational(1), sum);
    return sum;
  });
}

Rational shifted_joint_moment(const MomentProvider &provider, unsigned a, std::span<const unsigned> l,
                              unsigned r) {
  const auto k = static_cast<unsigned>(l.size());
  Rational sum;
  for (unsigned b = 0; b <= a; ++b)
    sum += Rational(binomial(a, b)) * pow(Rational(r), a - b) * joint_moment(provider, k, b, l);
  return sum;
}

std::vector<Rational> egf_truncation(const MomentProvider &provider, unsigned order) {
  std::vector<Rational> out;
  out.reserve(order + 1);
  for (unsigned n = 0; n <= order; ++n)
    out.push_back(provider.moment(n) / Rational(factorial(n)));
  return out;
}

} // namespace pbell
