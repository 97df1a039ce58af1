#include "pbell/cli.hpp"

#include <algorithm>
#include <optional>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pbell/bell.hpp"
#include "pbell/identities.hpp"
#include "pbell/report_io.hpp"
#include "pbell/stirling.hpp"

namespace pbell::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { pretty, json, csv };

Format parse_format(const std::string &name) {
  if (name == "json")
    return Format::json;
  if (name == "csv")
    return Format::csv;
  return Format::pretty;
}

// Signals a usage problem detected after option parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

DistributionSpec parse_dist(const std::string &text) {
  try {
    return DistributionSpec::parse(text);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
}

IdentityId parse_id(const std::string &name) {
  if (auto id = parse_identity(name))
    return *id;
  std::string known;
  for (IdentityId id : all_identities())
    known += (known.empty() ? "" : ", ") + std::string(identity_name(id));
  throw UsageError("unknown identity '" + name + "' (expected one of " + known + ")");
}

Rational parse_value(const std::string &text, const char *flag) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument &) {
    throw UsageError(std::string("bad value '") + text + "' for " + flag);
  }
}

void add_format(CLI::App *cmd, std::string &format) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"pretty", "json", "csv"}))
      ->capture_default_str();
}

struct StirlingArgs {
  std::string dist;
  unsigned n_max = 5;
  unsigned r = 0;
  std::string format = "pretty";
};

int cmd_stirling(const StirlingArgs &a, std::ostream &out) {
  const DistributionSpec spec = parse_dist(a.dist);
  const ProviderPtr provider = make_provider(spec);
  std::vector<std::vector<std::string>> rows;
  for (unsigned n = 0; n <= a.n_max; ++n) {
    std::vector<std::string> row;
    for (unsigned k = 0; k <= n; ++k)
      row.push_back(prob_stirling2(*provider, n, k, a.r).to_string());
    rows.push_back(std::move(row));
  }

  switch (parse_format(a.format)) {
  case Format::json: {
    ordered_json doc;
    doc["dist"] = spec.to_string();
    doc["r"] = a.r;
    doc["n_max"] = a.n_max;
    doc["rows"] = rows;
    out << doc.dump() << '\n';
    break;
  }
  case Format::csv:
    for (const auto &row : rows) {
      for (std::size_t k = 0; k < row.size(); ++k)
        out << (k ? "," : "") << row[k];
      out << '\n';
    }
    break;
  case Format::pretty: {
    std::vector<std::size_t> width(a.n_max + 2, 0);
    width[0] = std::max<std::size_t>(3, std::to_string(a.n_max).size());
    for (unsigned k = 0; k <= a.n_max; ++k)
      width[k + 1] = std::to_string(k).size();
    for (const auto &row : rows)
      for (std::size_t k = 0; k < row.size(); ++k)
        width[k + 1] = std::max(width[k + 1], row[k].size());
    auto cell = [&](const std::string &s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
    out << "# " << spec.to_string() << " r=" << a.r << '\n';
    std::string line = cell("n\\k", width[0]);
    for (unsigned k = 0; k <= a.n_max; ++k)
      line += "  " + cell(std::to_string(k), width[k + 1]);
    out << line << '\n';
    for (unsigned n = 0; n <= a.n_max; ++n) {
      line = cell(std::to_string(n), width[0]);
      for (unsigned k = 0; k <= n; ++k)
        line += "  " + cell(rows[n][k], width[k + 1]);
      out << line << '\n';
    }
    break;
  }
  }
  return kOk;
}

struct BellArgs {
  std::string dist;
  unsigned n = 0;
  unsigned r = 0;
  bool bivariate = false;
  std::optional<std::string> at_x;
  std::optional<std::string> at_y;
  std::string format = "pretty";
};

int cmd_bell(const BellArgs &a, std::ostream &out) {
  const DistributionSpec spec = parse_dist(a.dist);
  const ProviderPtr provider = make_provider(spec);
  BivarPoly poly = a.bivariate ? bell_bivariate(*provider, a.n, a.r) : bell_univariate(*provider, a.n, a.r);
  if (a.at_x)
    poly = poly.at_x(parse_value(*a.at_x, "--at-x"));
  if (a.at_y)
    poly = poly.at_y(parse_value(*a.at_y, "--at-y"));

  switch (parse_format(a.format)) {
  case Format::json: {
    ordered_json doc;
    doc["dist"] = spec.to_string();
    doc["n"] = a.n;
    doc["r"] = a.r;
    doc["bivariate"] = a.bivariate;
    if (a.at_x)
      doc["at_x"] = parse_value(*a.at_x, "--at-x").to_string();
    if (a.at_y)
      doc["at_y"] = parse_value(*a.at_y, "--at-y").to_string();
    doc["poly"] = poly.to_string();
    ordered_json terms = ordered_json::array();
    for (const auto &[e, c] : poly.terms())
      terms.push_back({{"x", e.x_deg}, {"y", e.y_deg}, {"coeff", c.to_string()}});
    doc["terms"] = terms;
    out << doc.dump() << '\n';
    break;
  }
  case Format::csv:
    out << "x_deg,y_deg,coeff\n";
    for (const auto &[e, c] : poly.terms())
      out << e.x_deg << ',' << e.y_deg << ',' << c.to_string() << '\n';
    break;
  case Format::pretty:
    out << poly.to_string() << '\n';
    break;
  }
  return kOk;
}

struct VerifyArgs {
  std::string identity;
  std::string dist = "det:1";
  unsigned m = 0;
  unsigned n = 0;
  unsigned r = 0;
  std::string format = "pretty";
};

int cmd_verify(const VerifyArgs &a, std::ostream &out) {
  const IdentityId id = parse_id(a.identity);
  const DistributionSpec spec = parse_dist(a.dist);
  const IdentityReport report = verify(id, spec, a.m, a.n, a.r);
  switch (parse_format(a.format)) {
  case Format::json:
    out << report_to_json(report).dump() << '\n';
    break;
  case Format::csv:
    out << report_csv_header() << '\n' << report_to_csv(report) << '\n';
    break;
  case Format::pretty:
    out << report_to_pretty(report);
    break;
  }
  return report.equal ? kOk : kNotEqual;
}

struct SweepArgs {
  std::string identity;
  std::string dist = "det:1";
  std::optional<unsigned> max_total;
  std::vector<unsigned> r_values{0};
  unsigned jobs = 1;
  std::string format = "pretty";
};

int cmd_sweep(const SweepArgs &a, std::ostream &out) {
  const IdentityId id = parse_id(a.identity);
  const DistributionSpec spec = parse_dist(a.dist);
  const bool any_r = std::any_of(a.r_values.begin(), a.r_values.end(), [](unsigned r) { return r != 0; });
  const unsigned max_total = a.max_total.value_or(any_r ? 7 : 8);
  const Format format = parse_format(a.format);

  if (format == Format::csv)
    out << report_csv_header() << '\n';
  auto emit = [&](const IdentityReport &report) {
    if (format == Format::csv)
      out << report_to_csv(report) << '\n' << std::flush;
    else if (format == Format::pretty)
      out << report_to_pretty(report) << std::flush;
  };
  const std::vector<IdentityReport> reports =
      sweep(id, spec, max_total, a.r_values, std::max(1u, a.jobs), emit);

  const auto equal = std::count_if(reports.begin(), reports.end(), [](const auto &r) { return r.equal; });
  const std::string summary = std::to_string(equal) + "/" + std::to_string(reports.size()) + " equal";
  switch (format) {
  case Format::json: {
    ordered_json doc;
    doc["identity"] = std::string(identity_name(id));
    doc["dist"] = (is_classical(id) ? DistributionSpec(Deterministic{1}) : spec).to_string();
    doc["max_total"] = max_total;
    doc["r"] = a.r_values;
    ordered_json list = ordered_json::array();
    for (const auto &report : reports)
      list.push_back(report_to_json(report));
    doc["reports"] = list;
    doc["equal"] = equal;
    doc["total"] = reports.size();
    doc["all_equal"] = all_equal(reports);
    doc["summary"] = summary;
    out << doc.dump() << '\n';
    break;
  }
  case Format::csv:
    out << "# " << summary << '\n';
    break;
  case Format::pretty:
    out << summary << '\n';
    break;
  }
  return all_equal(reports) ? kOk : kNotEqual;
}

} // namespace

int run(std::span<const std::string> args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact probabilistic Stirling numbers, Bell polynomials and recurrence checks", "pbell"};
  app.require_subcommand(1);

  StirlingArgs st;
  auto *stirling = app.add_subcommand("stirling", "Triangle of probabilistic r-Stirling numbers");
  stirling->add_option("--dist", st.dist, "Distribution of Y, e.g. bernoulli:1/2")->required();
  stirling->add_option("--n-max", st.n_max, "Largest n")->capture_default_str();
  stirling->add_option("--r", st.r, "Shift r >= 0")->capture_default_str();
  add_format(stirling, st.format);

  BellArgs bl;
  auto *bell = app.add_subcommand("bell", "Probabilistic (bivariate, r-) Bell polynomial");
  bell->add_option("--dist", bl.dist, "Distribution of Y")->required();
  bell->add_option("--n", bl.n, "Index n")->required();
  bell->add_option("--r", bl.r, "Shift r >= 0")->capture_default_str();
  bell->add_flag("--bivariate", bl.bivariate, "Bivariate family phi(x, y)");
  bell->add_option("--at-x", bl.at_x, "Substitute a rational value for x");
  bell->add_option("--at-y", bl.at_y, "Substitute a rational value for y");
  add_format(bell, bl.format);

  VerifyArgs vf;
  auto *verify_cmd = app.add_subcommand("verify", "Check one recurrence instance exactly");
  verify_cmd->add_option("identity", vf.identity, "Identity name (thm22, eq9, cor27, ...)")->required();
  verify_cmd->add_option("--dist", vf.dist, "Distribution of Y")->capture_default_str();
  verify_cmd->add_option("--m", vf.m, "Index m")->required();
  verify_cmd->add_option("--n", vf.n, "Index n")->required();
  verify_cmd->add_option("--r", vf.r, "Shift r >= 0")->capture_default_str();
  add_format(verify_cmd, vf.format);

  SweepArgs sw;
  auto *sweep_cmd = app.add_subcommand("sweep", "Check a recurrence for every m + n <= max-total");
  sweep_cmd->add_option("identity", sw.identity, "Identity name")->required();
  sweep_cmd->add_option("--dist", sw.dist, "Distribution of Y")->capture_default_str();
  sweep_cmd->add_option("--max-total", sw.max_total, "Largest m + n (default 8, or 7 when some r > 0)");
  sweep_cmd->add_option("--r", sw.r_values, "Comma-separated shifts")->delimiter(',')->capture_default_str();
  sweep_cmd->add_option("--jobs", sw.jobs, "Worker threads")->capture_default_str();
  add_format(sweep_cmd, sw.format);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0)
      return app.exit(e, out, err);
    err << "pbell: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*stirling)
      return cmd_stirling(st, out);
    if (*bell)
      return cmd_bell(bl, out);
    if (*verify_cmd)
      return cmd_verify(vf, out);
    return cmd_sweep(sw, out);
  } catch (const UsageError &e) {
    err << "pbell: " << e.what() << '\n';
    return kUsage;
  }
}

} // namespace pbell::cli
