#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "auctionlab/valuation.hpp"

namespace auctionlab {

struct Uniform {
  double lo = 0.0;
  double hi = 1.0;
};

struct Discrete {
  std::vector<double> values;
  std::vector<double> probs;
};

struct Constant {
  double value = 0.0;
};

using Marginal = std::variant<Uniform, Discrete, Constant>;

// Independent per-item marginals with an explicit value ceiling H. A marginal
// whose support exceeds the ceiling is rejected at validation time; samples
// are never clipped.
struct ProductDistribution {
  std::vector<Marginal> marginals;
  double ceiling = 1.0;  // H

  int k() const { return static_cast<int>(marginals.size()); }

  // Throws ConfigError on bad probabilities or out-of-range support;
  // renormalizes discrete probabilities that sum to 1 within 1e-12.
  void validate_and_normalize();

  bool finite_support() const;  // no Uniform marginals
  double marginal_mean(int item) const;
};

enum class Combiner { sum, max, budgeted_sum, sqrt_sum };

std::string to_string(Combiner c);
Combiner combiner_from_string(const std::string& s);

// Draws monotone subadditive table valuations from independent per-item
// attributes: v(K) = combine({x_kappa : kappa in K}).
struct SubadditiveGenerator {
  ProductDistribution attribute_dist;
  Combiner combiner = Combiner::sum;
  double budget = 0.0;  // budgeted_sum cap

  Valuation build(const std::vector<double>& attributes) const;
};

double combine(Combiner combiner, double budget, const std::vector<double>& attributes,
               Bundle bundle);

// What generates one buyer's valuation. All buyers are i.i.d. copies.
struct DistributionSpec {
  ValuationClass buyer_class = ValuationClass::additive;
  ProductDistribution items;
  Combiner combiner = Combiner::sum;  // buyer_class == table only
  double budget = 0.0;

  void validate();
  std::string describe() const;
};

double draw_marginal(const Marginal& m, double u01);

// Deterministic per (spec, n, seed); buyer i's item kappa uses the
// counter path (buyer, item).
ValuationProfile sample_profile(const DistributionSpec& spec, int n, std::uint64_t seed);

struct SampleSet {
  std::vector<ValuationProfile> profiles;
  std::uint64_t seed = 0;
  std::string source;
  double ceiling = 1.0;  // H of the generating distribution

  int m() const { return static_cast<int>(profiles.size()); }
  int n() const { return profiles.empty() ? 0 : profiles.front().n(); }
  int k() const { return profiles.empty() ? 0 : profiles.front().k(); }
  void check_compatible() const;
};

// Profile j uses the derived seed path (j); independent of draw order.
SampleSet draw_sample_set(const DistributionSpec& spec, int n, int m, std::uint64_t seed);

}  // namespace auctionlab
