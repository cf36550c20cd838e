#include "auctionlab/reductions.hpp"

#include <algorithm>

#include "auctionlab/errors.hpp"

namespace auctionlab {

namespace {

void require_multi_additive(const ValuationProfile& profile, const char* what) {
  if (profile.n() < 2) throw ConfigError(std::string(what) + ": needs n >= 2");
  if (profile.cls() != ValuationClass::additive) {
    throw ConfigError(std::string(what) + ": requires an additive profile");
  }
}

}  // namespace

BetaThresholds compute_beta(const ValuationProfile& profile) {
  require_multi_additive(profile, "compute_beta");
  const int n = profile.n();
  const int k = profile.k();
  BetaThresholds t;
  t.beta.assign(n, std::vector<double>(k, 0.0));
  for (int item = 0; item < k; ++item) {
    for (int i = 0; i < n; ++i) {
      double best = 0.0;
      bool any = false;
      for (int other = 0; other < n; ++other) {
        if (other == i) continue;
        double v = profile.value(other, item);
        if (!any || v > best) best = v;
        any = true;
      }
      t.beta[i][item] = best;
    }
  }
  return t;
}

ModifiedProfile modify_bids(const ValuationProfile& profile) {
  BetaThresholds t = compute_beta(profile);
  const int n = profile.n();
  const int k = profile.k();
  ModifiedProfile m;
  m.vbar.assign(n, std::vector<double>(k, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int item = 0; item < k; ++item) {
      double v = profile.value(i, item);
      m.vbar[i][item] = (v > t.beta[i][item]) ? v : 0.0;
    }
  }
  return m;
}

ItemPriceVector restrict_item_row(const ItemPriceVector& row,
                                  const std::vector<double>& beta_row) {
  if (row.size() != beta_row.size()) {
    throw ConfigError("restrict_item_row: row length mismatch");
  }
  ItemPriceVector out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) out[i] = std::max(row[i], beta_row[i]);
  return out;
}

double restrict_bundle_price(double bundle_price, const std::vector<double>& beta_row,
                             const std::vector<double>& vbar_row) {
  if (beta_row.size() != vbar_row.size()) {
    throw ConfigError("restrict_bundle_price: row length mismatch");
  }
  double beta_sum = 0.0;
  for (std::size_t i = 0; i < beta_row.size(); ++i) {
    if (vbar_row[i] > 0.0) beta_sum += beta_row[i];
  }
  return std::max(beta_sum, bundle_price);
}

namespace {

// Buyer i's restricted item-pricing purchase on her modified bid.
void buy_restricted_items(int buyer, const ItemPriceVector& row,
                          const std::vector<double>& beta_row,
                          const std::vector<double>& vbar_row, AuctionOutcome& out) {
  ItemPriceVector restricted = restrict_item_row(row, beta_row);
  for (std::size_t item = 0; item < vbar_row.size(); ++item) {
    if (vbar_row[item] > 0.0 && vbar_row[item] >= restricted[item]) {
      out.purchased[buyer] |= (1u << item);
      out.item_winner[item] = buyer;
      out.payments[buyer] += restricted[item];
      out.revenue += restricted[item];
    }
  }
}

// Buyer i's restricted bundle purchase on her modified bid.
void buy_restricted_bundle(int buyer, double bundle_price, const std::vector<double>& beta_row,
                           const std::vector<double>& vbar_row, AuctionOutcome& out) {
  Bundle support = 0;
  double vbar_total = 0.0;
  for (std::size_t item = 0; item < vbar_row.size(); ++item) {
    if (vbar_row[item] > 0.0) {
      support |= (1u << item);
      vbar_total += vbar_row[item];
    }
  }
  if (support == 0) return;
  double restricted = restrict_bundle_price(bundle_price, beta_row, vbar_row);
  if (vbar_total >= restricted) {
    out.purchased[buyer] = support;
    for (int item : bundle_items(support)) out.item_winner[item] = buyer;
    out.payments[buyer] = restricted;
    out.revenue += restricted;
  }
}

}  // namespace

RestrictedRunResult run_restricted_item_pricing(const ValuationProfile& profile,
                                                const std::vector<ItemPriceVector>& rows) {
  require_multi_additive(profile, "restricted_item_pricing");
  if (static_cast<int>(rows.size()) != profile.n()) {
    throw ConfigError("restricted_item_pricing: need one row per buyer");
  }
  BetaThresholds t = compute_beta(profile);
  ModifiedProfile m = modify_bids(profile);
  RestrictedRunResult result;
  result.outcome = AuctionOutcome::empty(profile.n(), profile.k());
  for (int i = 0; i < profile.n(); ++i) {
    buy_restricted_items(i, rows[i], t.beta[i], m.vbar[i], result.outcome);
  }
  result.revenue = result.outcome.revenue;
  return result;
}

RestrictedRunResult run_restricted_bundle_pricing(const ValuationProfile& profile,
                                                  const std::vector<double>& bundle_prices) {
  require_multi_additive(profile, "restricted_bundle_pricing");
  if (static_cast<int>(bundle_prices.size()) != profile.n()) {
    throw ConfigError("restricted_bundle_pricing: need one price per buyer");
  }
  BetaThresholds t = compute_beta(profile);
  ModifiedProfile m = modify_bids(profile);
  RestrictedRunResult result;
  result.outcome = AuctionOutcome::empty(profile.n(), profile.k());
  for (int i = 0; i < profile.n(); ++i) {
    buy_restricted_bundle(i, bundle_prices[i], t.beta[i], m.vbar[i], result.outcome);
  }
  result.revenue = result.outcome.revenue;
  return result;
}

AuctionOutcome run_restricted_composed(const ValuationProfile& profile,
                                       const RestrictedComposed& mech) {
  require_multi_additive(profile, "restricted_composed");
  if (static_cast<int>(mech.per_buyer.size()) != profile.n()) {
    throw ConfigError("restricted_composed: need one choice per buyer");
  }
  BetaThresholds t = compute_beta(profile);
  ModifiedProfile m = modify_bids(profile);
  AuctionOutcome out = AuctionOutcome::empty(profile.n(), profile.k());
  for (int i = 0; i < profile.n(); ++i) {
    if (const auto* row = std::get_if<BuyerItemRow>(&mech.per_buyer[i])) {
      if (static_cast<int>(row->prices.size()) != profile.k()) {
        throw ConfigError("restricted_composed: price row length != k");
      }
      buy_restricted_items(i, row->prices, t.beta[i], m.vbar[i], out);
    } else {
      buy_restricted_bundle(i, std::get<BuyerBundlePrice>(mech.per_buyer[i]).price, t.beta[i],
                            m.vbar[i], out);
    }
  }
  return out;
}

MaxMechResult max_mech(const std::vector<Mechanism>& mechs,
                       const std::vector<ValuationProfile>& eval_profiles) {
  if (mechs.empty()) throw ConfigError("max_mech: empty mechanism list");
  if (eval_profiles.empty()) throw ConfigError("max_mech: empty evaluation set");
  MaxMechResult r;
  r.mean_revenues.reserve(mechs.size());
  for (const auto& mech : mechs) {
    double total = 0.0;
    for (const auto& profile : eval_profiles) total += mechanism_revenue(profile, mech);
    r.mean_revenues.push_back(total / static_cast<double>(eval_profiles.size()));
  }
  for (std::size_t i = 1; i < mechs.size(); ++i) {
    if (r.mean_revenues[i] > r.mean_revenues[r.chosen_index]) r.chosen_index = i;
  }
  return r;
}

}  // namespace auctionlab
