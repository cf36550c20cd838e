#pragma once

#include <vector>

#include "auctionlab/valuation.hpp"

namespace auctionlab {

// Per-item posted prices. +infinity means "not for sale".
using ItemPriceVector = std::vector<double>;

struct PurchaseResult {
  Bundle bundle = 0;
  double utility = 0.0;
  double price_paid = 0.0;
};

// The buyer's utility-maximizing bundle among subsets of `available`, with
// the empty bundle always a candidate. Ties on utility go to the most
// expensive bundle; remaining ties to the lexicographically smallest bundle.
// Additive buyers use the per-item rule: buy kappa iff v({kappa}) >= p(kappa),
// which realizes the most-expensive tie-break item by item.
PurchaseResult best_bundle(const Valuation& v, const ItemPriceVector& prices, Bundle available);

// Grand-bundle take-it-or-leave-it: buy iff v([k]) >= r.
bool grand_bundle_choice(const Valuation& v, double bundle_price);

}  // namespace auctionlab
