#ifndef PBELL_IDENTITIES_HPP
#define PBELL_IDENTITIES_HPP

#include <chrono>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pbell/combinatorics.hpp"
#include "pbell/distribution.hpp"
#include "pbell/moments.hpp"
#include "pbell/poly.hpp"

namespace pbell {

enum class IdentityId {
  thm22,
  thm24,
  thm25,
  thm26,
  thm27,
  eq4_spivey,
  eq5_gould_quaintance,
  eq9_zheng_li,
  eq10_zheng_li,
  cor22_y1,
  cor24_y1,
  cor25_y1,
  cor27_y1,
};

std::span<const IdentityId> all_identities();
// Short command-line name: thm22, eq4, cor27, ...
std::string_view identity_name(IdentityId id);
// Accepts the short name or the long enumerator name (eq4_spivey).
std::optional<IdentityId> parse_identity(std::string_view name);
// Y = 1 identities; they always run against det:1.
bool is_classical(IdentityId id);
bool uses_r(IdentityId id);

// Hook for permuting composition lists before they are summed. Every
// consumer is a commutative sum, so any permutation must leave results
// unchanged; tests use this to shuffle.
struct EvalOptions {
  std::function<void(std::vector<Composition> &)> reorder;
};

// Right-hand sides of the probabilistic recurrences. Each returns a
// polynomial that must equal the matching left-hand side:
//   thm22: phi^Y_{m+n}(x,y)         thm24, thm25: phi^Y_{m+n,r}(x,y)
//   thm26, thm27: phi^Y_{m+n,r}(x)
BivarPoly rhs_thm22(const MomentProvider &provider, unsigned m, unsigned n, const EvalOptions &opts = {});
BivarPoly rhs_thm24(const MomentProvider &provider, unsigned m, unsigned n, unsigned r,
                    const EvalOptions &opts = {});
BivarPoly rhs_thm25(const MomentProvider &provider, unsigned m, unsigned n, unsigned r,
                    const EvalOptions &opts = {});
BivarPoly rhs_thm26(const MomentProvider &provider, unsigned m, unsigned n, unsigned r,
                    const EvalOptions &opts = {});
BivarPoly rhs_thm27(const MomentProvider &provider, unsigned m, unsigned n, unsigned r,
                    const EvalOptions &opts = {});

// Classical closed forms built from Stirling tables. For eq4/eq5, m plays
// the role of l. Throws std::invalid_argument for a non-classical id.
BivarPoly rhs_classical(IdentityId id, unsigned m, unsigned n, unsigned r = 0);

// The directly computed side (closed form via prob_stirling2) at order m+n.
BivarPoly lhs(IdentityId id, const MomentProvider &provider, unsigned m, unsigned n, unsigned r);
BivarPoly rhs(IdentityId id, const MomentProvider &provider, unsigned m, unsigned n, unsigned r,
              const EvalOptions &opts = {});

struct IdentityReport {
  IdentityId identity = IdentityId::thm22;
  unsigned m = 0;
  unsigned n = 0;
  unsigned r = 0;
  DistributionSpec dist{Deterministic{1}};
  BivarPoly lhs;
  BivarPoly rhs;
  bool equal = false;
  std::chrono::duration<double, std::milli> elapsed{0};
  // Extra remark attached to some identities; empty for most.
  std::string note;
};

// Inequality is reported through IdentityReport::equal, never thrown.
IdentityReport verify(IdentityId id, const DistributionSpec &spec, unsigned m, unsigned n, unsigned r,
                      const EvalOptions &opts = {});
IdentityReport verify(IdentityId id, const DistributionSpec &spec, const ProviderPtr &provider, unsigned m,
                      unsigned n, unsigned r, const EvalOptions &opts = {});

// Runs verify for every m + n <= max_total and r in r_values, ordered by m,
// then n, then r. Cells run on up to `jobs` threads; on_report (if set)
// sees reports in that order as soon as each is available.
std::vector<IdentityReport> sweep(IdentityId id, const DistributionSpec &spec, unsigned max_total,
                                  std::span<const unsigned> r_values, unsigned jobs = 1,
                                  const std::function<void(const IdentityReport &)> &on_report = {});

bool all_equal(std::span<const IdentityReport> reports);

} // namespace pbell

#endif // PBELL_IDENTITIES_HPP
