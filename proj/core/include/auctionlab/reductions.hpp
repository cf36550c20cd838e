#pragma once

#include <vector>

#include "auctionlab/mechanisms.hpp"
#include "auctionlab/valuation.hpp"

namespace auctionlab {

// beta[i][kappa] = max over i' != i of v_{i'}(kappa).
struct BetaThresholds {
  std::vector<std::vector<double>> beta;
};

// vbar[i][kappa] = v_i(kappa) * 1[v_i(kappa) > beta[i][kappa]]. Strict:
// exact value ties zero out both bidders.
struct ModifiedProfile {
  std::vector<std::vector<double>> vbar;
};

BetaThresholds compute_beta(const ValuationProfile& profile);
ModifiedProfile modify_bids(const ValuationProfile& profile);

// Elementwise max(beta_i, p_i).
ItemPriceVector restrict_item_row(const ItemPriceVector& row, const std::vector<double>& beta_row);

// max(sum of beta over the support of vbar_i, r_i).
double restrict_bundle_price(double bundle_price, const std::vector<double>& beta_row,
                             const std::vector<double>& vbar_row);

struct RestrictedRunResult {
  double revenue = 0.0;
  AuctionOutcome outcome;  // induced allocation, for feasibility checks
};

// Sum over buyers of the beta^i-restricted single-buyer item pricing run on
// vbar_i: buyer i gets kappa iff vbar_i(kappa) > 0 and clears the restricted
// price max(beta^i_kappa, p_i(kappa)), paying that price.
RestrictedRunResult run_restricted_item_pricing(const ValuationProfile& profile,
                                                const std::vector<ItemPriceVector>& rows);

// Sum over buyers of the restricted grand-bundle pricing on vbar_i: buyer i
// is offered her strict-win support at max(sum beta over it, r_i).
RestrictedRunResult run_restricted_bundle_pricing(const ValuationProfile& profile,
                                                  const std::vector<double>& bundle_prices);

// Per-buyer mixed composition used by the learned Yao pipeline.
AuctionOutcome run_restricted_composed(const ValuationProfile& profile,
                                       const RestrictedComposed& mech);

// Empirical max-mech: the candidate with the highest mean revenue on the
// evaluation set; ties go to the earliest in the list.
struct MaxMechResult {
  std::size_t chosen_index = 0;
  std::vector<double> mean_revenues;
};

MaxMechResult max_mech(const std::vector<Mechanism>& mechs,
                       const std::vector<ValuationProfile>& eval_profiles);

}  // namespace auctionlab
