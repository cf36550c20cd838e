#pragma once

#include <string>
#include <variant>
#include <vector>

#include "auctionlab/demand.hpp"
#include "auctionlab/valuation.hpp"

namespace auctionlab {

// ---- auction formats -------------------------------------------------------

struct AnonItem {
  ItemPriceVector prices;
};
struct IndItem {
  std::vector<ItemPriceVector> rows;  // one row per buyer
};
struct AnonBundle {
  double price = 0.0;
};
struct IndBundle {
  std::vector<double> prices;  // one per buyer
};
struct SecondPrice {};
struct SPReservesAnon {
  ItemPriceVector reserves;
};
struct SPReservesInd {
  std::vector<ItemPriceVector> rows;
};

// Composed Yao mechanism: per buyer, a beta-restricted item-price row or a
// beta-restricted grand-bundle price. Restriction thresholds come from the
// profile at run time (beta^i_kappa = max_{i' != i} v_{i'}(kappa)).
struct BuyerItemRow {
  ItemPriceVector prices;
};
struct BuyerBundlePrice {
  double price = 0.0;
};
using RestrictedChoice = std::variant<BuyerItemRow, BuyerBundlePrice>;
struct RestrictedComposed {
  std::vector<RestrictedChoice> per_buyer;
};

using Mechanism = std::variant<AnonItem, IndItem, AnonBundle, IndBundle, SecondPrice,
                               SPReservesAnon, SPReservesInd, RestrictedComposed>;

std::string mechanism_kind(const Mechanism& mech);

// ---- outcomes --------------------------------------------------------------

struct AuctionOutcome {
  std::vector<int> item_winner;   // per item; -1 if unsold
  std::vector<double> payments;   // per buyer
  std::vector<Bundle> purchased;  // per buyer
  double revenue = 0.0;

  static AuctionOutcome empty(int n, int k);
};

// Highest and second-highest single-item bidders, ties to the lowest index.
struct ItemCompetition {
  std::vector<int> win;            // per item
  std::vector<int> second;         // per item
  std::vector<double> win_value;   // v_{win}(item)
  std::vector<double> second_value;
};

// ---- execution -------------------------------------------------------------

// Buyers shop in index order; buyer i sees her price row restricted to the
// items previous buyers left behind.
AuctionOutcome run_sequential_item_pricing(const ValuationProfile& profile, const AnonItem& rule);
AuctionOutcome run_sequential_item_pricing(const ValuationProfile& profile, const IndItem& rule);

// First buyer in index order with v_i([k]) >= r_i takes everything.
AuctionOutcome run_sequential_bundle_pricing(const ValuationProfile& profile,
                                             const AnonBundle& rule);
AuctionOutcome run_sequential_bundle_pricing(const ValuationProfile& profile,
                                             const IndBundle& rule);

// Additive or unit-demand profiles, n >= 2.
ItemCompetition item_competition(const ValuationProfile& profile);

// Additive profiles, n >= 2.
AuctionOutcome run_second_price(const ValuationProfile& profile);
AuctionOutcome run_sp_with_reserves(const ValuationProfile& profile, const SPReservesAnon& rule);
AuctionOutcome run_sp_with_reserves(const ValuationProfile& profile, const SPReservesInd& rule);

// Revenue-reduced item pricing: p(kappa) if kappa is the unique item whose
// value clears its price, else 0. A scoring rule, not a strategic mechanism.
double run_reduced_item_pricing(const Valuation& v, const ItemPriceVector& prices);

// Unified dispatch used by the harness, learners and shattering search.
AuctionOutcome run_mechanism(const ValuationProfile& profile, const Mechanism& mech);

double mechanism_revenue(const ValuationProfile& profile, const Mechanism& mech);

}  // namespace auctionlab
