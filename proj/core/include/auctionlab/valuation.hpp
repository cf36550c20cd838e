#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "auctionlab/bundle.hpp"

namespace auctionlab {

enum class ValuationClass { additive, unit_demand, table };

std::string to_string(ValuationClass c);
ValuationClass valuation_class_from_string(const std::string& s);

// Claims about a table valuation, checked exactly by validate_valuation.
struct ClassFlags {
  bool monotone = false;
  bool subadditive = false;
  bool additive = false;
  bool unit_demand = false;
};

// A single buyer's valuation over k items. Additive and unit-demand
// valuations store the k single-item values; table valuations store all
// 2^k bundle values indexed by bundle mask.
class Valuation {
 public:
  static Valuation additive(std::vector<double> item_values);
  static Valuation unit_demand(std::vector<double> item_values);
  static Valuation table(int k, std::vector<double> bundle_values, ClassFlags flags = {});

  ValuationClass cls() const { return cls_; }
  int k() const { return k_; }
  const ClassFlags& flags() const { return flags_; }

  // v(K) under the class semantics: sum / max / table lookup. v(empty) = 0.
  double bundle_value(Bundle bundle) const;

  // v({item}): the single-item value, available for every class.
  double item_value(int item) const;

  const std::vector<double>& raw_values() const { return values_; }

 private:
  Valuation(ValuationClass cls, int k, std::vector<double> values, ClassFlags flags);

  ValuationClass cls_;
  int k_;
  std::vector<double> values_;
  ClassFlags flags_;
};

inline double bundle_value(const Valuation& v, Bundle bundle) { return v.bundle_value(bundle); }

struct PropertyViolation {
  std::string property;  // "monotone", "subadditive", "additive", "unit_demand", ...
  Bundle witness_a = 0;
  Bundle witness_b = 0;
};

// Empty iff every claimed property holds exactly. Each report names the
// violated property and a witnessing bundle pair.
std::vector<PropertyViolation> validate_valuation(const Valuation& v);

// n buyers, all of the same valuation class.
struct ValuationProfile {
  std::vector<Valuation> buyers;

  int n() const { return static_cast<int>(buyers.size()); }
  int k() const { return buyers.empty() ? 0 : buyers.front().k(); }
  ValuationClass cls() const;
  void check_homogeneous() const;  // throws ConfigError on mixed classes

  // Additive/unit-demand single-item value of buyer i for an item.
  double value(int buyer, int item) const { return buyers[buyer].item_value(item); }
};

}  // namespace auctionlab
