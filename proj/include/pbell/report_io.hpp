#ifndef PBELL_REPORT_IO_HPP
#define PBELL_REPORT_IO_HPP

#include <string>

#include <json.hpp>

#include "pbell/identities.hpp"

namespace pbell {

// {identity, m, n, r, dist, lhs, rhs, equal, elapsed_ms[, note]}
nlohmann::ordered_json report_to_json(const IdentityReport &report);
// Throws std::invalid_argument (or nlohmann::json::exception) on a
// malformed document.
IdentityReport report_from_json(const nlohmann::ordered_json &doc);

std::string report_csv_header();
std::string report_to_csv(const IdentityReport &report);

// Multi-line human-readable block; the timing line starts with "  elapsed_ms".
std::string report_to_pretty(const IdentityReport &report);

} // namespace pbell

#endif // PBELL_REPORT_IO_HPP
