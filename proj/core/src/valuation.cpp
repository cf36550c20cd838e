#include "auctionlab/valuation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "auctionlab/errors.hpp"

namespace auctionlab {

std::string to_string(ValuationClass c) {
  switch (c) {
    case ValuationClass::additive: return "additive";
    case ValuationClass::unit_demand: return "unit_demand";
    case ValuationClass::table: return "table";
  }
  return "?";
}

ValuationClass valuation_class_from_string(const std::string& s) {
  if (s == "additive") return ValuationClass::additive;
  if (s == "unit_demand" || s == "unit-demand") return ValuationClass::unit_demand;
  if (s == "table" || s == "subadditive") return ValuationClass::table;
  throw ConfigError("unknown valuation class: " + s);
}

Valuation::Valuation(ValuationClass cls, int k, std::vector<double> values, ClassFlags flags)
    : cls_(cls), k_(k), values_(std::move(values)), flags_(flags) {}

Valuation Valuation::additive(std::vector<double> item_values) {
  int k = static_cast<int>(item_values.size());
  if (k > kMaxVectorItems) throw SizeLimitError("additive valuation: k > 30");
  return Valuation(ValuationClass::additive, k, std::move(item_values), {});
}

Valuation Valuation::unit_demand(std::vector<double> item_values) {
  int k = static_cast<int>(item_values.size());
  if (k > kMaxVectorItems) throw SizeLimitError("unit-demand valuation: k > 30");
  return Valuation(ValuationClass::unit_demand, k, std::move(item_values), {});
}

Valuation Valuation::table(int k, std::vector<double> bundle_values, ClassFlags flags) {
  if (k > kMaxTableItems) throw SizeLimitError("table valuation: k > 20");
  if (bundle_values.size() != (1ull << k)) {
    throw std::invalid_argument("table valuation: expected 2^k bundle values");
  }
  return Valuation(ValuationClass::table, k, std::move(bundle_values), flags);
}

double Valuation::bundle_value(Bundle bundle) const {
  switch (cls_) {
    case ValuationClass::additive: {
      double sum = 0.0;
      Bundle b = bundle;
      while (b != 0) {
        sum += values_[std::countr_zero(b)];
        b &= b - 1;
      }
      return sum;
    }
    case ValuationClass::unit_demand: {
      double best = 0.0;
      Bundle b = bundle;
      while (b != 0) {
        best = std::max(best, values_[std::countr_zero(b)]);
        b &= b - 1;
      }
      return best;
    }
    case ValuationClass::table:
      return values_[bundle];
  }
  return 0.0;
}

double Valuation::item_value(int item) const {
  if (cls_ == ValuationClass::table) return values_[1u << item];
  return values_[item];
}

namespace {

void validate_table(const Valuation& v, std::vector<PropertyViolation>& out) {
  const int k = v.k();
  const Bundle all = full_bundle(k);
  const auto& t = v.raw_values();

  if (t[0] != 0.0) out.push_back({"empty_bundle_zero", 0, 0});

  for (Bundle b = 0; b <= all; ++b) {
    if (t[b] < 0.0) {
      out.push_back({"nonnegative", b, b});
      break;
    }
    if (b == all) break;
  }

  if (v.flags().monotone) {
    // Single-item extensions suffice.
    for (Bundle b = 0; b < all; ++b) {
      for (int item = 0; item < k; ++item) {
        if (contains(b, item)) continue;
        Bundle b2 = b | (1u << item);
        if (t[b2] < t[b]) {
          out.push_back({"monotone", b, b2});
          return;
        }
      }
    }
  }

  if (v.flags().subadditive) {
    if (k > 14) throw SizeLimitError("subadditivity check: k > 14");
    // All bipartitions (K1, K\K1) of every bundle K.
    for (Bundle whole = 1; ; ++whole) {
      for (Bundle part = (whole - 1) & whole; part != 0; part = (part - 1) & whole) {
        Bundle rest = whole & ~part;
        if (rest == 0) continue;
        if (t[whole] > t[part] + t[rest]) {
          out.push_back({"subadditive", part, rest});
          return;
        }
      }
      if (whole == all) break;
    }
  }

  if (v.flags().additive) {
    for (Bundle b = 0; ; ++b) {
      double sum = 0.0;
      for (int item = 0; item < k; ++item) {
        if (contains(b, item)) sum += t[1u << item];
      }
      if (t[b] != sum) {
        out.push_back({"additive", b, b});
        break;
      }
      if (b == all) break;
    }
  }

  if (v.flags().unit_demand) {
    for (Bundle b = 0; ; ++b) {
      double best = 0.0;
      for (int item = 0; item < k; ++item) {
        if (contains(b, item)) best = std::max(best, t[1u << item]);
      }
      if (t[b] != best) {
        out.push_back({"unit_demand", b, b});
        break;
      }
      if (b == all) break;
    }
  }
}

}  // namespace

std::vector<PropertyViolation> validate_valuation(const Valuation& v) {
  std::vector<PropertyViolation> out;
  if (v.cls() == ValuationClass::table) {
    validate_table(v, out);
    return out;
  }
  // Vector forms satisfy their defining identity by construction; only the
  // sign constraint can be violated.
  for (int item = 0; item < v.k(); ++item) {
    if (v.item_value(item) < 0.0) {
      out.push_back({"nonnegative", static_cast<Bundle>(1u << item), 0});
      break;
    }
  }
  return out;
}

ValuationClass ValuationProfile::cls() const {
  if (buyers.empty()) throw ConfigError("empty valuation profile");
  return buyers.front().cls();
}

void ValuationProfile::check_homogeneous() const {
  if (buyers.empty()) throw ConfigError("empty valuation profile");
  for (const auto& b : buyers) {
    if (b.cls() != buyers.front().cls() || b.k() != buyers.front().k()) {
      throw ConfigError("valuation profile mixes classes or item counts");
    }
  }
}

}  // namespace auctionlab
