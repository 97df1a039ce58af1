#include "pbell/report_io.hpp"

#include <cstdio>
#include <stdexcept>

namespace pbell {

namespace {

std::string csv_field(const std::string &value) {
  if (value.find_first_of(",\"\n") == std::string::npos)
    return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + '"';
}

std::string format_ms(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

} // namespace

nlohmann::ordered_json report_to_json(const IdentityReport &report) {
  nlohmann::ordered_json ordered;
  ordered["identity"] = std::string(identity_name(report.identity));
  ordered["m"] = report.m;
  ordered["n"] = report.n;
  ordered["r"] = report.r;
  ordered["dist"] = report.dist.to_string();
  ordered["lhs"] = report.lhs.to_string();
  ordered["rhs"] = report.rhs.to_string();
  ordered["equal"] = report.equal;
  ordered["elapsed_ms"] = report.elapsed.count();
  if (!report.note.empty())
    ordered["note"] = report.note;
  return ordered;
}

IdentityReport report_from_json(const nlohmann::ordered_json &doc) {
  IdentityReport report;
  const auto id = parse_identity(doc.at("identity").get<std::string>());
  if (!id)
    throw std::invalid_argument("unknown identity '" + doc.at("identity").get<std::string>() + "'");
  report.identity = *id;
  report.m = doc.at("m").get<unsigned>();
  report.n = doc.at("n").get<unsigned>();
  report.r = doc.at("r").get<unsigned>();
  report.dist = DistributionSpec::parse(doc.at("dist").get<std::string>());
  report.lhs = BivarPoly::parse(doc.at("lhs").get<std::string>());
  report.rhs = BivarPoly::parse(doc.at("rhs").get<std::string>());
  report.equal = doc.at("equal").get<bool>();
  report.elapsed = std::chrono::duration<double, std::milli>(doc.at("elapsed_ms").get<double>());
  if (doc.contains("note"))
    report.note = doc.at("note").get<std::string>();
  return report;
}

std::string report_csv_header() { return "identity,m,n,r,dist,lhs,rhs,equal,elapsed_ms"; }

std::string report_to_csv(const IdentityReport &report) {
  std::string out;
  out += identity_name(report.identity);
  out += ',' + std::to_string(report.m);
  out += ',' + std::to_string(report.n);
  out += ',' + std::to_string(report.r);
  out += ',' + csv_field(report.dist.to_string());
  out += ',' + csv_field(report.lhs.to_string());
  out += ',' + csv_field(report.rhs.to_string());
  out += report.equal ? ",true" : ",false";
  out += ',' + format_ms(report.elapsed.count());
  return out;
}

std::string report_to_pretty(const IdentityReport &report) {
  std::string out;
  out += std::string(identity_name(report.identity)) + " m=" + std::to_string(report.m) +
         " n=" + std::to_string(report.n) + " r=" + std::to_string(report.r) +
         " dist=" + report.dist.to_string() + '\n';
  out += "  lhs   = " + report.lhs.to_string() + '\n';
  out += "  rhs   = " + report.rhs.to_string() + '\n';
  out += std::string("  equal = ") + (report.equal ? "true" : "false") + '\n';
  if (!report.note.empty())
    out += "  note  = " + report.note + '\n';
  out += "  elapsed_ms = " + format_ms(report.elapsed.count()) + '\n';
  return out;
}

} // namespace pbell
