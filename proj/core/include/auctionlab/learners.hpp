#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "auctionlab/distribution.hpp"
#include "auctionlab/mechanisms.hpp"
#include "auctionlab/reductions.hpp"

namespace auctionlab {

enum class SearchMode { exact_grid, exhaustive_product, hill_climb };

std::string to_string(SearchMode m);

struct ErmResult {
  Mechanism chosen;
  double empirical_mean_revenue = 0.0;
  SearchMode search_mode = SearchMode::exact_grid;
  std::uint64_t candidates_examined = 0;
};

// Grand-bundle ERM for a single buyer. Candidates are the sample totals;
// raising any other price to the next total weakly improves revenue, so the
// grid optimum is the global optimum. Ties go to the smallest price.
ErmResult erm_bundle_pricing(const SampleSet& samples);

// Per-item ERM for a single additive buyer: item kappa's candidates are its
// sample values, smallest price on ties.
ErmResult erm_item_pricing_additive(const SampleSet& samples);

struct GeneralErmOptions {
  SearchMode mode = SearchMode::exhaustive_product;
  int restarts = 3;             // hill climb
  std::uint64_t seed = 0;       // hill climb
  std::optional<std::vector<double>> start;  // hill climb: fixed start point
  std::uint64_t max_grid_points = 10'000'000;
};

// Item-pricing ERM for unit-demand/table buyers (any n) by full grid search
// over per-coordinate candidates pooled from every sample value, plus the
// +infinity sentinel. n = 1 yields an anonymous rule, n >= 2 individualized
// rows. Exhaustive mode requires n*k <= 12 and a grid within the cap.
ErmResult erm_item_pricing_general(const SampleSet& samples, const GeneralErmOptions& opts = {});

struct ReducedErmResult {
  ErmResult result;            // empirical_mean_revenue is the reduced score
  double full_mean_revenue = 0.0;  // the same pricing scored by best_bundle
};

// Revenue-reduced item-pricing ERM for a single buyer: per-item candidate
// grids from that item's sample values plus +infinity; objective h_p.
ReducedErmResult erm_reduced_item_pricing(const SampleSet& samples,
                                          const GeneralErmOptions& opts = {});

struct PipelineBuyerChoice {
  RestrictedChoice choice;
  double item_mean = 0.0;
  double bundle_mean = 0.0;
};

struct PipelineResult {
  Mechanism chosen;  // RestrictedComposed or SecondPrice
  double composed_mean = 0.0;
  double sp_mean = 0.0;
  std::vector<PipelineBuyerChoice> per_buyer;
};

// Yao pipeline for n >= 2 additive buyers: per buyer, ERM over restricted
// item rows and restricted bundle prices on the modified bids; compose the
// winners; then pick the better of the composition and second-price by mean
// revenue on the training sample.
PipelineResult erm_multi_additive_pipeline(const SampleSet& samples);

// Exact expected revenue by summation over a finite-support product
// distribution (all marginals Discrete or Constant). Support capped at 1e6
// profiles.
double true_revenue(const Mechanism& mech, const DistributionSpec& spec, int n);

struct BrevPrevResult {
  double brev = 0.0;
  double prev = 0.0;
  double reduced_prev = 0.0;
  Mechanism brev_rule;
  Mechanism prev_rule;
  Mechanism reduced_prev_rule;
};

// Optimal bundle / item / reduced-item pricing revenue for a single buyer
// with finite support, by exact maximization over support-derived grids.
BrevPrevResult exact_brev_prev(const DistributionSpec& spec);

struct SampleBoundQuery {
  double epsilon = 0.1;
  double delta = 0.1;
  double ceiling = 1.0;  // H
  double pseudo_dimension = 1.0;
};

struct SampleBoundResult {
  std::uint64_t m = 0;
  std::string note;  // the bound is order-of-magnitude: constant fixed to 1
};

// ceil((H/eps)^2 * (pd * ln(H/eps) + ln(1/delta))).
SampleBoundResult sample_bound(const SampleBoundQuery& q);

}  // namespace auctionlab
