#include "pbell/distribution.hpp"

#include <stdexcept>

namespace pbell {

namespace {

[[noreturn]] void reject(const std::string &why) { throw std::invalid_argument(why); }

struct Validator {
  void operator()(const Deterministic &) const {}
  void operator()(const Bernoulli &b) const {
    if (b.p < Rational(0) || b.p > Rational(1))
      reject("bernoulli probability " + b.p.to_string() + " outside [0, 1]");
  }
  void operator()(const FiniteDiscrete &d) const {
    if (d.atoms.empty())
      reject("discrete distribution needs at least one atom");
    Rational total;
    for (const auto &atom : d.atoms) {
      if (atom.probability.sign() < 0)
        reject("discrete probability " + atom.probability.to_string() + " is negative");
      total += atom.probability;
    }
    if (total != Rational(1))
      reject("discrete probabilities sum to " + total.to_string() + ", expected 1");
  }
  void operator()(const Poisson &p) const {
    if (p.rate.sign() < 0)
      reject("poisson rate " + p.rate.to_string() + " is negative");
  }
};

struct Printer {
  std::string operator()(const Deterministic &d) const { return "det:" + d.value.to_string(); }
  std::string operator()(const Bernoulli &b) const { return "bernoulli:" + b.p.to_string(); }
  std::string operator()(const FiniteDiscrete &d) const {
    std::string out = "discrete:";
    for (std::size_t i = 0; i < d.atoms.size(); ++i) {
      if (i)
        out += ';';
      out += '(' + d.atoms[i].value.to_string() + ',' + d.atoms[i].probability.to_string() + ')';
    }
    return out;
  }
  std::string operator()(const Poisson &p) const { return "poisson:" + p.rate.to_string(); }
};

Rational number(std::string_view text, std::string_view context) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument &) {
    reject("bad number '" + std::string(text) + "' in distribution '" + std::string(context) + "'");
  }
}

FiniteDiscrete parse_atoms(std::string_view body, std::string_view context) {
  FiniteDiscrete out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t end = body.find(';', pos);
    if (end == std::string_view::npos)
      end = body.size();
    std::string_view item = body.substr(pos, end - pos);
    if (item.size() < 5 || item.front() != '(' || item.back() != ')')
      reject("bad atom '" + std::string(item) + "' in '" + std::string(context) + "', expected (value,prob)");
    item = item.substr(1, item.size() - 2);
    const auto comma = item.find(',');
    if (comma == std::string_view::npos)
      reject("bad atom '(" + std::string(item) + ")' in '" + std::string(context) + "', expected (value,prob)");
    out.atoms.push_back({number(item.substr(0, comma), context), number(item.substr(comma + 1), context)});
    pos = end + 1;
  }
  return out;
}

} // namespace

DistributionSpec::DistributionSpec(Law law) : law_(std::move(law)) { std::visit(Validator{}, law_); }

DistributionSpec DistributionSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    reject("malformed distribution '" + std::string(text) + "', expected <kind>:<params>");
  const std::string_view kind = text.substr(0, colon);
  const std::string_view body = text.substr(colon + 1);
  if (kind == "det")
    return DistributionSpec(Deterministic{number(body, text)});
  if (kind == "bernoulli")
    return DistributionSpec(Bernoulli{number(body, text)});
  if (kind == "poisson")
    return DistributionSpec(Poisson{number(body, text)});
  if (kind == "discrete")
    return DistributionSpec(parse_atoms(body, text));
  reject("unknown distribution kind '" + std::string(kind) + "' (expected det, bernoulli, discrete, poisson)");
}

std::string DistributionSpec::to_string() const { return std::visit(Printer{}, law_); }

} // namespace pbell
