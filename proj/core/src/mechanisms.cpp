#include "auctionlab/mechanisms.hpp"

#include <algorithm>

#include "auctionlab/errors.hpp"
#include "auctionlab/reductions.hpp"

namespace auctionlab {

std::string mechanism_kind(const Mechanism& mech) {
  struct Visitor {
    std::string operator()(const AnonItem&) const { return "anon_item"; }
    std::string operator()(const IndItem&) const { return "ind_item"; }
    std::string operator()(const AnonBundle&) const { return "anon_bundle"; }
    std::string operator()(const IndBundle&) const { return "ind_bundle"; }
    std::string operator()(const SecondPrice&) const { return "second_price"; }
    std::string operator()(const SPReservesAnon&) const { return "sp_reserves_anon"; }
    std::string operator()(const SPReservesInd&) const { return "sp_reserves_ind"; }
    std::string operator()(const RestrictedComposed&) const { return "restricted_composed"; }
  };
  return std::visit(Visitor{}, mech);
}

AuctionOutcome AuctionOutcome::empty(int n, int k) {
  AuctionOutcome o;
  o.item_winner.assign(k, -1);
  o.payments.assign(n, 0.0);
  o.purchased.assign(n, 0u);
  o.revenue = 0.0;
  return o;
}

namespace {

void check_row(const ItemPriceVector& row, int k, const char* what) {
  if (static_cast<int>(row.size()) != k) {
    throw ConfigError(std::string(what) + ": price row length != k");
  }
  for (double p : row) {
    if (p < 0.0) throw ConfigError(std::string(what) + ": negative price");
  }
}

AuctionOutcome sequential_item(const ValuationProfile& profile,
                               const std::vector<const ItemPriceVector*>& rows) {
  const int n = profile.n();
  const int k = profile.k();
  AuctionOutcome out = AuctionOutcome::empty(n, k);
  Bundle remaining = full_bundle(k);
  for (int i = 0; i < n; ++i) {
    PurchaseResult r = best_bundle(profile.buyers[i], *rows[i], remaining);
    out.purchased[i] = r.bundle;
    out.payments[i] = r.price_paid;
    out.revenue += r.price_paid;
    for (int item : bundle_items(r.bundle)) out.item_winner[item] = i;
    remaining &= ~r.bundle;
  }
  return out;
}

AuctionOutcome sequential_bundle(const ValuationProfile& profile,
                                 const std::vector<double>& prices) {
  const int n = profile.n();
  const int k = profile.k();
  AuctionOutcome out = AuctionOutcome::empty(n, k);
  for (int i = 0; i < n; ++i) {
    if (grand_bundle_choice(profile.buyers[i], prices[i])) {
      out.purchased[i] = full_bundle(k);
      out.payments[i] = prices[i];
      out.revenue = prices[i];
      for (int item = 0; item < k; ++item) out.item_winner[item] = i;
      break;
    }
  }
  return out;
}

void require_additive(const ValuationProfile& profile, const char* what) {
  if (profile.cls() != ValuationClass::additive) {
    throw ConfigError(std::string(what) + ": requires an additive profile");
  }
}

}  // namespace

AuctionOutcome run_sequential_item_pricing(const ValuationProfile& profile, const AnonItem& rule) {
  check_row(rule.prices, profile.k(), "anon_item");
  std::vector<const ItemPriceVector*> rows(profile.n(), &rule.prices);
  return sequential_item(profile, rows);
}

AuctionOutcome run_sequential_item_pricing(const ValuationProfile& profile, const IndItem& rule) {
  if (static_cast<int>(rule.rows.size()) != profile.n()) {
    throw ConfigError("ind_item: need one price row per buyer");
  }
  std::vector<const ItemPriceVector*> rows;
  rows.reserve(profile.n());
  for (const auto& row : rule.rows) {
    check_row(row, profile.k(), "ind_item");
    rows.push_back(&row);
  }
  return sequential_item(profile, rows);
}

AuctionOutcome run_sequential_bundle_pricing(const ValuationProfile& profile,
                                             const AnonBundle& rule) {
  if (rule.price < 0.0) throw ConfigError("anon_bundle: negative price");
  return sequential_bundle(profile, std::vector<double>(profile.n(), rule.price));
}

AuctionOutcome run_sequential_bundle_pricing(const ValuationProfile& profile,
                                             const IndBundle& rule) {
  if (static_cast<int>(rule.prices.size()) != profile.n()) {
    throw ConfigError("ind_bundle: need one price per buyer");
  }
  for (double p : rule.prices) {
    if (p < 0.0) throw ConfigError("ind_bundle: negative price");
  }
  return sequential_bundle(profile, rule.prices);
}

ItemCompetition item_competition(const ValuationProfile& profile) {
  if (profile.n() < 2) throw ConfigError("item_competition: needs n >= 2");
  if (profile.cls() == ValuationClass::table) {
    throw ConfigError("item_competition: requires additive or unit-demand profiles");
  }
  const int n = profile.n();
  const int k = profile.k();
  ItemCompetition c;
  c.win.assign(k, 0);
  c.second.assign(k, 0);
  c.win_value.assign(k, 0.0);
  c.second_value.assign(k, 0.0);
  for (int item = 0; item < k; ++item) {
    int win = 0;
    for (int i = 1; i < n; ++i) {
      if (profile.value(i, item) > profile.value(win, item)) win = i;
    }
    int second = (win == 0) ? 1 : 0;
    for (int i = 0; i < n; ++i) {
      if (i == win) continue;
      if (profile.value(i, item) > profile.value(second, item)) second = i;
    }
    c.win[item] = win;
    c.second[item] = second;
    c.win_value[item] = profile.value(win, item);
    c.second_value[item] = profile.value(second, item);
  }
  return c;
}

AuctionOutcome run_second_price(const ValuationProfile& profile) {
  require_additive(profile, "second_price");
  ItemCompetition c = item_competition(profile);
  AuctionOutcome out = AuctionOutcome::empty(profile.n(), profile.k());
  for (int item = 0; item < profile.k(); ++item) {
    int w = c.win[item];
    out.item_winner[item] = w;
    out.purchased[w] |= (1u << item);
    out.payments[w] += c.second_value[item];
    out.revenue += c.second_value[item];
  }
  return out;
}

namespace {

AuctionOutcome sp_reserves(const ValuationProfile& profile,
                           const std::vector<const ItemPriceVector*>& reserve_rows) {
  ItemCompetition c = item_competition(profile);
  AuctionOutcome out = AuctionOutcome::empty(profile.n(), profile.k());
  for (int item = 0; item < profile.k(); ++item) {
    int w = c.win[item];
    double reserve = (*reserve_rows[w])[item];
    if (c.win_value[item] >= reserve) {
      double price = std::max(reserve, c.second_value[item]);
      out.item_winner[item] = w;
      out.purchased[w] |= (1u << item);
      out.payments[w] += price;
      out.revenue += price;
    }
  }
  return out;
}

}  // namespace

AuctionOutcome run_sp_with_reserves(const ValuationProfile& profile, const SPReservesAnon& rule) {
  require_additive(profile, "sp_reserves");
  check_row(rule.reserves, profile.k(), "sp_reserves_anon");
  std::vector<const ItemPriceVector*> rows(profile.n(), &rule.reserves);
  return sp_reserves(profile, rows);
}

AuctionOutcome run_sp_with_reserves(const ValuationProfile& profile, const SPReservesInd& rule) {
  require_additive(profile, "sp_reserves");
  if (static_cast<int>(rule.rows.size()) != profile.n()) {
    throw ConfigError("sp_reserves_ind: need one reserve row per buyer");
  }
  std::vector<const ItemPriceVector*> rows;
  rows.reserve(profile.n());
  for (const auto& row : rule.rows) {
    check_row(row, profile.k(), "sp_reserves_ind");
    rows.push_back(&row);
  }
  return sp_reserves(profile, rows);
}

double run_reduced_item_pricing(const Valuation& v, const ItemPriceVector& prices) {
  if (static_cast<int>(prices.size()) != v.k()) {
    throw ConfigError("reduced_item_pricing: price vector length != k");
  }
  int cleared = -1;
  for (int item = 0; item < v.k(); ++item) {
    if (v.item_value(item) >= prices[item]) {
      if (cleared >= 0) return 0.0;  // more than one item clears
      cleared = item;
    }
  }
  return cleared >= 0 ? prices[cleared] : 0.0;
}

AuctionOutcome run_mechanism(const ValuationProfile& profile, const Mechanism& mech) {
  struct Visitor {
    const ValuationProfile& profile;
    AuctionOutcome operator()(const AnonItem& m) const {
      return run_sequential_item_pricing(profile, m);
    }
    AuctionOutcome operator()(const IndItem& m) const {
      return run_sequential_item_pricing(profile, m);
    }
    AuctionOutcome operator()(const AnonBundle& m) const {
      return run_sequential_bundle_pricing(profile, m);
    }
    AuctionOutcome operator()(const IndBundle& m) const {
      return run_sequential_bundle_pricing(profile, m);
    }
    AuctionOutcome operator()(const SecondPrice&) const { return run_second_price(profile); }
    AuctionOutcome operator()(const SPReservesAnon& m) const {
      return run_sp_with_reserves(profile, m);
    }
    AuctionOutcome operator()(const SPReservesInd& m) const {
      return run_sp_with_reserves(profile, m);
    }
    AuctionOutcome operator()(const RestrictedComposed& m) const {
      return run_restricted_composed(profile, m);
    }
  };
  return std::visit(Visitor{profile}, mech);
}

double mechanism_revenue(const ValuationProfile& profile, const Mechanism& mech) {
  return run_mechanism(profile, mech).revenue;
}

}  // namespace auctionlab
