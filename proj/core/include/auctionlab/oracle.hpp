#pragma once

#include <string>
#include <vector>

#include "auctionlab/distribution.hpp"
#include "auctionlab/mechanisms.hpp"
#include "auctionlab/valuation.hpp"

namespace auctionlab {

// A single buyer with finitely many possible valuations. The ground truth
// for approximation-factor checks.
struct FiniteTypeSpace {
  std::vector<Valuation> types;
  std::vector<double> probs;
  int k = 0;
  bool product_hypothesis = false;  // materialized from a product distribution

  void validate() const;  // caps: |types| <= 64, k <= 4, probs sum to 1
};

// Cross product of the discrete marginals of a single-buyer distribution.
FiniteTypeSpace materialize_type_space(const DistributionSpec& spec);

// Optimal IC/IR menu of bundle lotteries: per type, weights q_{t,S} over
// nonempty bundles (remaining mass on the empty bundle) and a payment.
struct MenuEntry {
  std::vector<double> lottery;  // indexed by bundle mask; [0] unused mass
  double payment = 0.0;
};

struct MenuSolution {
  std::vector<MenuEntry> menu;  // per type
  double revenue = 0.0;
  double max_ic_violation = 0.0;  // from the post-solve feasibility re-check
  double max_ir_violation = 0.0;
};

// Exact Rev(F) for the finite type space via the menu LP, solved with the
// in-tree simplex. The returned menu re-verifies IC/IR within 1e-8.
MenuSolution lp_optimal_revenue(const FiniteTypeSpace& ts);

// Best bundle / item / reduced-item pricing revenue against a finite type
// space (additive item pricing decomposes per item; otherwise grid search).
struct TypeSpacePricingBest {
  double brev = 0.0;
  double prev = 0.0;
  double reduced_prev = 0.0;
};

TypeSpacePricingBest best_pricings(const FiniteTypeSpace& ts);

struct ApproxFactorReport {
  double rev = 0.0;
  double brev = 0.0;
  double prev = 0.0;
  double reduced_prev = 0.0;
  double factor = 0.0;
  bool factor_ok = false;           // factor * max(brev, prev) >= rev - 1e-8
  bool product_hypothesis = false;  // the 6-factor theorem assumes independence
};

ApproxFactorReport verify_approx_factor(const FiniteTypeSpace& ts, double factor);

}  // namespace auctionlab
