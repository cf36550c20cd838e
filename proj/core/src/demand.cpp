#include "auctionlab/demand.hpp"

#include <limits>
#include <stdexcept>

#include "auctionlab/errors.hpp"

namespace auctionlab {

namespace {

double bundle_price(const ItemPriceVector& prices, Bundle b) {
  double total = 0.0;
  while (b != 0) {
    total += prices[std::countr_zero(b)];
    b &= b - 1;
  }
  return total;
}

// candidate beats incumbent under (utility desc, price desc, lex asc)?
bool better(double utility, double price, Bundle bundle, const PurchaseResult& incumbent) {
  if (utility != incumbent.utility) return utility > incumbent.utility;
  if (price != incumbent.price_paid) return price > incumbent.price_paid;
  return lex_less(bundle, incumbent.bundle);
}

}  // namespace

PurchaseResult best_bundle(const Valuation& v, const ItemPriceVector& prices, Bundle available) {
  if (static_cast<int>(prices.size()) != v.k()) {
    throw std::invalid_argument("best_bundle: price vector length != k");
  }

  if (v.cls() == ValuationClass::additive) {
    PurchaseResult r;
    for (int item = 0; item < v.k(); ++item) {
      if (!contains(available, item)) continue;
      double value = v.item_value(item);
      if (value >= prices[item]) {
        r.bundle |= (1u << item);
        r.price_paid += prices[item];
        r.utility += value - prices[item];
      }
    }
    return r;
  }

  if (v.k() > kMaxTableItems) {
    throw SizeLimitError("best_bundle: bundle enumeration requires k <= 20");
  }

  PurchaseResult best;  // empty bundle: utility 0, price 0
  Bundle sub = available;
  while (sub != 0) {
    double price = bundle_price(prices, sub);
    double utility = v.bundle_value(sub) - price;
    if (better(utility, price, sub, best)) {
      best = {sub, utility, price};
    }
    sub = (sub - 1) & available;
  }
  return best;
}

bool grand_bundle_choice(const Valuation& v, double bundle_price) {
  return v.bundle_value(full_bundle(v.k())) >= bundle_price;
}

}  // namespace auctionlab
