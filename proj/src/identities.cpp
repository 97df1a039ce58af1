#include "pbell/identities.hpp"

#include <array>
#include <condition_variable>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "pbell/bell.hpp"
#include "pbell/stirling.hpp"

namespace pbell {

namespace {

struct IdentityInfo {
  IdentityId id;
  std::string_view short_name;
  std::string_view long_name;
  bool classical;
  bool uses_r;
};

constexpr std::array<IdentityInfo, 13> kIdentities{{
    {IdentityId::thm22, "thm22", "thm22", false, false},
    {IdentityId::thm24, "thm24", "thm24", false, true},
    {IdentityId::thm25, "thm25", "thm25", false, true},
    {IdentityId::thm26, "thm26", "thm26", false, true},
    {IdentityId::thm27, "thm27", "thm27", false, true},
    {IdentityId::eq4_spivey, "eq4", "eq4_spivey", true, false},
    {IdentityId::eq5_gould_quaintance, "eq5", "eq5_gould_quaintance", true, false},
    {IdentityId::eq9_zheng_li, "eq9", "eq9_zheng_li", true, false},
    {IdentityId::eq10_zheng_li, "eq10", "eq10_zheng_li", true, true},
    {IdentityId::cor22_y1, "cor22", "cor22_y1", true, false},
    {IdentityId::cor24_y1, "cor24", "cor24_y1", true, true},
    {IdentityId::cor25_y1, "cor25", "cor25_y1", true, true},
    {IdentityId::cor27_y1, "cor27", "cor27_y1", true, true},
}};

constexpr std::array<IdentityId, 13> kIds = [] {
  std::array<IdentityId, 13> out{};
  for (std::size_t i = 0; i < kIdentities.size(); ++i)
    out[i] = kIdentities[i].id;
  return out;
}();

const IdentityInfo &info(IdentityId id) {
  for (const auto &entry : kIdentities)
    if (entry.id == id)
      return entry;
  throw std::invalid_argument("unknown identity id");
}

Rational rat(const Integer &v) { return Rational(v); }

Rational rpow(unsigned base, unsigned exp) { return pow(Rational(base), exp); }

std::vector<Composition> collect(unsigned n, unsigned k, const EvalOptions &opts) {
  std::vector<Composition> out = compositions(n, k).to_vector();
  if (opts.reorder)
    opts.reorder(out);
  return out;
}

// (x)_k y^k
BivarPoly falling_y(unsigned k) { return falling_factorial(k).shifted_degrees(0, k); }

// For fixed k, the inner weight of the r-recurrences for every a = 0..a_max:
//   sum_{j=k}^{m} C(m,j) r^{m-j} sum_{l in comp(j,k)} multinomial(j; l) * E_a(l)
// with E_a(l) = E[S_k^a prod Y_i^{l_i}], or E[(S_k+r)^a prod Y_i^{l_i}]
// when shifted is set.
std::vector<Rational> r_weights(const MomentProvider &provider, unsigned m, unsigned k, unsigned a_max,
                                unsigned r, bool shifted, const EvalOptions &opts) {
  std::vector<Rational> out(a_max + 1);
  for (unsigned j = k; j <= m; ++j) {
    const Rational outer = rat(binomial(m, j)) * rpow(r, m - j);
    if (outer.is_zero())
      continue;
    for (const Composition &c : collect(j, k, opts)) {
      const Rational weight = outer * rat(multinomial(j, c.parts));
      for (unsigned a = 0; a <= a_max; ++a) {
        const Rational e = shifted ? shifted_joint_moment(provider, a, c.parts, r)
                                   : joint_moment(provider, k, a, c.parts);
        out[a] += weight * e;
      }
    }
  }
  return out;
}

enum class InnerBell { bivariate_r, bivariate_plain, univariate_r, univariate_plain };

// Shared body of the r-recurrences:
//   sum_i sum_k C(n,i) * inner(i, k) * basis(k) / k! * weight_k(n - i)
BivarPoly r_recurrence(const MomentProvider &provider, unsigned m, unsigned n, unsigned r, InnerBell inner,
                       bool shifted, const EvalOptions &opts) {
  std::vector<BivarPoly> bells(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    switch (inner) {
    case InnerBell::bivariate_r:
      bells[i] = bell_bivariate(provider, i, r);
      break;
    case InnerBell::bivariate_plain:
      bells[i] = bell_bivariate(provider, i, 0);
      break;
    case InnerBell::univariate_r:
      bells[i] = bell_univariate(provider, i, r);
      break;
    case InnerBell::univariate_plain:
      bells[i] = bell_univariate(provider, i, 0);
      break;
    }
  }
  const bool bivariate = inner == InnerBell::bivariate_r || inner == InnerBell::bivariate_plain;

  BivarPoly out;
  for (unsigned k = 0; k <= m; ++k) {
    const std::vector<Rational> weights = r_weights(provider, m, k, n, r, shifted, opts);
    const BivarPoly basis = bivariate ? falling_y(k) : BivarPoly::monomial(1, k, 0);
    const Rational inv_fact = Rational(1) / rat(factorial(k));
    for (unsigned i = 0; i <= n; ++i) {
      const Rational scalar = rat(binomial(n, i)) * weights[n - i] * inv_fact;
      if (scalar.is_zero())
        continue;
      BivarPoly bell = bivariate ? bells[i].translate_x(-Rational(k)) : bells[i];
      out += bell * basis * scalar;
    }
  }
  return out;
}

const MomentProvider &unit() { return *unit_provider(); }

BivarPoly classical_bell(unsigned i, unsigned r, bool bivariate) {
  return bivariate ? bell_bivariate(unit(), i, r) : bell_univariate(unit(), i, r);
}

} // namespace

std::span<const IdentityId> all_identities() { return kIds; }

std::string_view identity_name(IdentityId id) { return info(id).short_name; }

std::optional<IdentityId> parse_identity(std::string_view name) {
  for (const auto &entry : kIdentities)
    if (entry.short_name == name || entry.long_name == name)
      return entry.id;
  return std::nullopt;
}

bool is_classical(IdentityId id) { return info(id).classical; }

bool uses_r(IdentityId id) { return info(id).uses_r; }

BivarPoly rhs_thm22(const MomentProvider &provider, unsigned m, unsigned n, const EvalOptions &opts) {
  BivarPoly out;
  for (unsigned k = 0; k <= n; ++k) {
    const std::vector<Composition> comps = collect(n, k, opts);
    if (comps.empty())
      continue;
    // inner[j] = sum_{l in comp(n,k)} multinomial(n; l) E[S_k^{m-j} prod Y_i^{l_i}]
    std::vector<Rational> inner(m + 1);
    for (const Composition &c : comps) {
      const Rational weight = rat(multinomial(n, c.parts));
      for (unsigned j = 0; j <= m; ++j)
        inner[j] += weight * joint_moment(provider, k, m - j, c.parts);
    }
    const BivarPoly basis = falling_y(k);
    const Rational inv_fact = Rational(1) / rat(factorial(k));
    for (unsigned j = 0; j <= m; ++j) {
      const Rational scalar = rat(binomial(m, j)) * inner[j] * inv_fact;
      if (scalar.is_zero())
        continue;
      out += bell_bivariate(provider, j, 0).translate_x(-Rational(k)) * basis * scalar;
    }
  }
  return out;
}

BivarPoly rhs_thm24(const MomentProvider &provider, unsigned m, unsigned n, unsigned r, const EvalOptions &opts) {
  return r_recurrence(provider, m, n, r, InnerBell::bivariate_r, false, opts);
}

BivarPoly rhs_thm25(const MomentProvider &provider, unsigned m, unsigned n, unsigned r, const EvalOptions &opts) {
  return r_recurrence(provider, m, n, r, InnerBell::bivariate_plain, true, opts);
}

BivarPoly rhs_thm26(const MomentProvider &provider, unsigned m, unsigned n, unsigned r, const EvalOptions &opts) {
  return r_recurrence(provider, m, n, r, InnerBell::univariate_r, false, opts);
}

BivarPoly rhs_thm27(const MomentProvider &provider, unsigned m, unsigned n, unsigned r, const EvalOptions &opts) {
  return r_recurrence(provider, m, n, r, InnerBell::univariate_plain, true, opts);
}

BivarPoly rhs_classical(IdentityId id, unsigned m, unsigned n, unsigned r) {
  BivarPoly out;
  switch (id) {
  case IdentityId::eq4_spivey:
  case IdentityId::eq5_gould_quaintance: {
    // sum_{k<=l} sum_{i<=n} k^{n-i} C(n,i) S(l,k) phi_i(x) x^k, at x = 1 for eq4
    const bool at_one = id == IdentityId::eq4_spivey;
    for (unsigned k = 0; k <= m; ++k)
      for (unsigned i = 0; i <= n; ++i) {
        const Rational scalar = rpow(k, n - i) * rat(binomial(n, i)) * stirling2(m, k, 0);
        if (scalar.is_zero())
          continue;
        const BivarPoly phi = classical_bell(i, 0, false);
        if (at_one)
          out += BivarPoly(phi.evaluate(1, 0) * scalar);
        else
          out += phi.shifted_degrees(k, 0) * scalar;
      }
    return out;
  }
  case IdentityId::eq9_zheng_li:
  case IdentityId::eq10_zheng_li:
  case IdentityId::cor24_y1: {
    // sum_k sum_i k^{n-i} C(n,i) S_r(m,k) phi_{i,r}(x-k,y) (x)_k y^k
    const unsigned rr = id == IdentityId::eq9_zheng_li ? 0 : r;
    for (unsigned k = 0; k <= m; ++k)
      for (unsigned i = 0; i <= n; ++i) {
        const Rational scalar = rpow(k, n - i) * rat(binomial(n, i)) * stirling2(m, k, rr);
        if (scalar.is_zero())
          continue;
        out += classical_bell(i, rr, true).translate_x(-Rational(k)) * falling_y(k) * scalar;
      }
    return out;
  }
  case IdentityId::cor22_y1: {
    // sum_{k<=n} sum_{j<=m} C(m,j) phi_j(x-k,y) (x)_k y^k S(n,k) k^{m-j}
    for (unsigned k = 0; k <= n; ++k)
      for (unsigned j = 0; j <= m; ++j) {
        const Rational scalar = rat(binomial(m, j)) * stirling2(n, k, 0) * rpow(k, m - j);
        if (scalar.is_zero())
          continue;
        out += classical_bell(j, 0, true).translate_x(-Rational(k)) * falling_y(k) * scalar;
      }
    return out;
  }
  case IdentityId::cor25_y1: {
    // sum_i sum_k C(n,i) (x)_k y^k phi_i(x-k,y) S_r(m,k) (r+k)^{n-i}
    for (unsigned i = 0; i <= n; ++i)
      for (unsigned k = 0; k <= m; ++k) {
        const Rational scalar = rat(binomial(n, i)) * stirling2(m, k, r) * rpow(r + k, n - i);
        if (scalar.is_zero())
          continue;
        out += classical_bell(i, 0, true).translate_x(-Rational(k)) * falling_y(k) * scalar;
      }
    return out;
  }
  case IdentityId::cor27_y1: {
    // sum_i sum_k C(n,i) x^k phi_i(x) S_r(m,k) (k+r)^{n-i}
    for (unsigned i = 0; i <= n; ++i)
      for (unsigned k = 0; k <= m; ++k) {
        const Rational scalar = rat(binomial(n, i)) * stirling2(m, k, r) * rpow(k + r, n - i);
        if (scalar.is_zero())
          continue;
        out += classical_bell(i, 0, false).shifted_degrees(k, 0) * scalar;
      }
    return out;
  }
  default:
    throw std::invalid_argument("rhs_classical: '" + std::string(identity_name(id)) +
                                "' is not a classical identity");
  }
}

BivarPoly lhs(IdentityId id, const MomentProvider &provider, unsigned m, unsigned n, unsigned r) {
  const unsigned order = m + n;
  switch (id) {
  case IdentityId::thm22:
  case IdentityId::eq9_zheng_li:
  case IdentityId::cor22_y1:
    return bell_bivariate(provider, order, 0);
  case IdentityId::thm24:
  case IdentityId::thm25:
  case IdentityId::eq10_zheng_li:
  case IdentityId::cor24_y1:
  case IdentityId::cor25_y1:
    return bell_bivariate(provider, order, r);
  case IdentityId::thm26:
  case IdentityId::thm27:
  case IdentityId::cor27_y1:
    return bell_univariate(provider, order, r);
  case IdentityId::eq5_gould_quaintance:
    return bell_univariate(provider, order, 0);
  case IdentityId::eq4_spivey:
    return BivarPoly(bell_univariate(provider, order, 0).evaluate(1, 0));
  }
  throw std::invalid_argument("unknown identity id");
}

BivarPoly rhs(IdentityId id, const MomentProvider &provider, unsigned m, unsigned n, unsigned r,
              const EvalOptions &opts) {
  switch (id) {
  case IdentityId::thm22:
    return rhs_thm22(provider, m, n, opts);
  case IdentityId::thm24:
    return rhs_thm24(provider, m, n, r, opts);
  case IdentityId::thm25:
    return rhs_thm25(provider, m, n, r, opts);
  case IdentityId::thm26:
    return rhs_thm26(provider, m, n, r, opts);
  case IdentityId::thm27:
    return rhs_thm27(provider, m, n, r, opts);
  default:
    return rhs_classical(id, m, n, r);
  }
}

IdentityReport verify(IdentityId id, const DistributionSpec &spec, unsigned m, unsigned n, unsigned r,
                      const EvalOptions &opts) {
  if (is_classical(id))
    return verify(id, spec, unit_provider(), m, n, r, opts);
  return verify(id, spec, make_provider(spec), m, n, r, opts);
}

IdentityReport verify(IdentityId id, const DistributionSpec &spec, const ProviderPtr &provider, unsigned m,
                      unsigned n, unsigned r, const EvalOptions &opts) {
  const auto start = std::chrono::steady_clock::now();
  IdentityReport report;
  report.identity = id;
  report.m = m;
  report.n = n;
  report.r = r;
  if (is_classical(id)) {
    report.dist = DistributionSpec(Deterministic{1});
    const MomentProvider &law = *unit_provider();
    report.lhs = lhs(id, law, m, n, r);
    report.rhs = rhs(id, law, m, n, r, opts);
  } else {
    report.dist = spec;
    report.lhs = lhs(id, *provider, m, n, r);
    report.rhs = rhs(id, *provider, m, n, r, opts);
  }
  report.equal = report.lhs == report.rhs;
  if (id == IdentityId::cor27_y1) {
    // The corollary is also stated with phi_{m+n}(x) on the left; record
    // how that reading fares.
    const bool alt = bell_univariate(*unit_provider(), m + n, 0) == report.rhs;
    report.note = std::string("r-free lhs phi_{m+n}(x) reading: ") + (alt ? "equal" : "not equal");
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::vector<IdentityReport> sweep(IdentityId id, const DistributionSpec &spec, unsigned max_total,
                                  std::span<const unsigned> r_values, unsigned jobs,
                                  const std::function<void(const IdentityReport &)> &on_report) {
  struct Cell {
    unsigned m, n, r;
  };
  std::vector<Cell> cells;
  for (unsigned m = 0; m <= max_total; ++m)
    for (unsigned n = 0; m + n <= max_total; ++n)
      for (unsigned r : r_values)
        cells.push_back({m, n, r});

  const ProviderPtr provider = is_classical(id) ? unit_provider() : make_provider(spec);
  std::vector<std::optional<IdentityReport>> results(cells.size());
  auto run = [&](std::size_t idx) {
    const Cell &c = cells[idx];
    return verify(id, spec, provider, c.m, c.n, c.r);
  };

  std::vector<IdentityReport> out;
  out.reserve(cells.size());
  if (jobs <= 1 || cells.size() <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out.push_back(run(i));
      if (on_report)
        on_report(out.back());
    }
    return out;
  }

  std::mutex mutex;
  std::condition_variable ready;
  std::size_t next = 0;
  std::exception_ptr failure;
  auto worker = [&] {
    for (;;) {
      std::size_t idx;
      {
        std::lock_guard lock(mutex);
        if (next >= cells.size() || failure)
          return;
        idx = next++;
      }
      try {
        IdentityReport report = run(idx);
        std::lock_guard lock(mutex);
        results[idx] = std::move(report);
      } catch (...) {
        std::lock_guard lock(mutex);
        failure = std::current_exception();
      }
      ready.notify_all();
    }
  };

  std::vector<std::jthread> pool;
  const unsigned threads = std::min<std::size_t>(jobs, cells.size());
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back(worker);

  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::unique_lock lock(mutex);
    ready.wait(lock, [&] { return results[i].has_value() || failure; });
    if (failure)
      break;
    out.push_back(*results[i]);
    lock.unlock();
    if (on_report)
      on_report(out.back());
  }
  pool.clear();
  if (failure)
    std::rethrow_exception(failure);
  return out;
}

bool all_equal(std::span<const IdentityReport> reports) {
  for (const auto &r : reports)
    if (!r.equal)
      return false;
  return true;
}

} // namespace pbell
