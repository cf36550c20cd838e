#include "auctionlab/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "auctionlab/errors.hpp"
#include "auctionlab/rng.hpp"

namespace auctionlab {

namespace {

constexpr double kProbTolerance = 1e-12;

void validate_marginal(Marginal& m, double ceiling) {
  if (auto* u = std::get_if<Uniform>(&m)) {
    if (u->lo > u->hi) throw ConfigError("uniform marginal: lo > hi");
    if (u->lo < 0.0 || u->hi > ceiling) {
      throw ConfigError("uniform marginal support outside [0, H]");
    }
  } else if (auto* d = std::get_if<Discrete>(&m)) {
    if (d->values.empty() || d->values.size() != d->probs.size()) {
      throw ConfigError("discrete marginal: values/probs size mismatch");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < d->values.size(); ++i) {
      if (d->values[i] < 0.0 || d->values[i] > ceiling) {
        throw ConfigError("discrete marginal support outside [0, H]");
      }
      if (d->probs[i] < 0.0) throw ConfigError("discrete marginal: negative probability");
      total += d->probs[i];
    }
    if (std::abs(total - 1.0) > kProbTolerance) {
      throw ConfigError("discrete marginal probabilities do not sum to 1");
    }
    for (double& p : d->probs) p /= total;
  } else {
    auto& c = std::get<Constant>(m);
    if (c.value < 0.0 || c.value > ceiling) {
      throw ConfigError("constant marginal outside [0, H]");
    }
  }
}

}  // namespace

void ProductDistribution::validate_and_normalize() {
  if (ceiling <= 0.0) throw ConfigError("value ceiling H must be positive");
  if (marginals.empty()) throw ConfigError("product distribution needs at least one item");
  for (auto& m : marginals) validate_marginal(m, ceiling);
}

bool ProductDistribution::finite_support() const {
  for (const auto& m : marginals) {
    if (std::holds_alternative<Uniform>(m)) return false;
  }
  return true;
}

double ProductDistribution::marginal_mean(int item) const {
  const Marginal& m = marginals[item];
  if (const auto* u = std::get_if<Uniform>(&m)) return 0.5 * (u->lo + u->hi);
  if (const auto* d = std::get_if<Discrete>(&m)) {
    double s = 0.0;
    for (std::size_t i = 0; i < d->values.size(); ++i) s += d->values[i] * d->probs[i];
    return s;
  }
  return std::get<Constant>(m).value;
}

std::string to_string(Combiner c) {
  switch (c) {
    case Combiner::sum: return "sum";
    case Combiner::max: return "max";
    case Combiner::budgeted_sum: return "budgeted_sum";
    case Combiner::sqrt_sum: return "sqrt_sum";
  }
  return "?";
}

Combiner combiner_from_string(const std::string& s) {
  if (s == "sum") return Combiner::sum;
  if (s == "max") return Combiner::max;
  if (s == "budgeted_sum" || s == "budget") return Combiner::budgeted_sum;
  if (s == "sqrt_sum" || s == "sqrt") return Combiner::sqrt_sum;
  throw ConfigError("unknown combiner: " + s);
}

double combine(Combiner combiner, double budget, const std::vector<double>& attributes,
               Bundle bundle) {
  double sum = 0.0, best = 0.0;
  Bundle b = bundle;
  while (b != 0) {
    double x = attributes[std::countr_zero(b)];
    sum += x;
    best = std::max(best, x);
    b &= b - 1;
  }
  switch (combiner) {
    case Combiner::sum: return sum;
    case Combiner::max: return best;
    case Combiner::budgeted_sum: return std::min(sum, budget);
    case Combiner::sqrt_sum: return std::sqrt(sum);
  }
  return 0.0;
}

Valuation SubadditiveGenerator::build(const std::vector<double>& attributes) const {
  const int k = static_cast<int>(attributes.size());
  std::vector<double> table(1ull << k);
  for (Bundle b = 0; b < table.size(); ++b) {
    table[b] = combine(combiner, budget, attributes, b);
  }
  ClassFlags flags;
  flags.monotone = true;
  flags.subadditive = true;
  flags.additive = (combiner == Combiner::sum);
  flags.unit_demand = (combiner == Combiner::max);
  return Valuation::table(k, std::move(table), flags);
}

void DistributionSpec::validate() {
  items.validate_and_normalize();
  if (buyer_class == ValuationClass::table) {
    if (items.k() > 12) throw SizeLimitError("subadditive generator: k > 12");
    if (combiner == Combiner::budgeted_sum && budget < 0.0) {
      throw ConfigError("budgeted_sum combiner needs budget >= 0");
    }
  }
}

std::string DistributionSpec::describe() const {
  std::ostringstream os;
  os << to_string(buyer_class) << " k=" << items.k() << " H=" << items.ceiling;
  if (buyer_class == ValuationClass::table) {
    os << " combiner=" << to_string(combiner);
    if (combiner == Combiner::budgeted_sum) os << " budget=" << budget;
  }
  return os.str();
}

double draw_marginal(const Marginal& m, double u01) {
  if (const auto* u = std::get_if<Uniform>(&m)) {
    return u->lo + u01 * (u->hi - u->lo);
  }
  if (const auto* d = std::get_if<Discrete>(&m)) {
    double acc = 0.0;
    for (std::size_t i = 0; i < d->values.size(); ++i) {
      acc += d->probs[i];
      if (u01 < acc) return d->values[i];
    }
    return d->values.back();
  }
  return std::get<Constant>(m).value;
}

ValuationProfile sample_profile(const DistributionSpec& spec, int n, std::uint64_t seed) {
  if (n < 1) throw ConfigError("sample_profile: n must be >= 1");
  const int k = spec.items.k();
  ValuationProfile profile;
  profile.buyers.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<double> draws(k);
    for (int item = 0; item < k; ++item) {
      double u = rng::unit(seed, {static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(item)});
      draws[item] = draw_marginal(spec.items.marginals[item], u);
    }
    switch (spec.buyer_class) {
      case ValuationClass::additive:
        profile.buyers.push_back(Valuation::additive(std::move(draws)));
        break;
      case ValuationClass::unit_demand:
        profile.buyers.push_back(Valuation::unit_demand(std::move(draws)));
        break;
      case ValuationClass::table: {
        SubadditiveGenerator gen{spec.items, spec.combiner, spec.budget};
        profile.buyers.push_back(gen.build(draws));
        break;
      }
    }
  }
  return profile;
}

void SampleSet::check_compatible() const {
  for (const auto& p : profiles) {
    p.check_homogeneous();
    if (p.n() != n() || p.k() != k() || p.cls() != profiles.front().cls()) {
      throw ConfigError("sample set mixes profile shapes");
    }
  }
}

SampleSet draw_sample_set(const DistributionSpec& spec, int n, int m, std::uint64_t seed) {
  if (m < 1) throw ConfigError("draw_sample_set: m must be >= 1");
  SampleSet s;
  s.seed = seed;
  s.source = spec.describe();
  s.ceiling = spec.items.ceiling;
  s.profiles.reserve(m);
  for (int j = 0; j < m; ++j) {
    s.profiles.push_back(
        sample_profile(spec, n, rng::derive(seed, {static_cast<std::uint64_t>(j)})));
  }
  return s;
}

}  // namespace auctionlab
