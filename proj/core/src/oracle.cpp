#include "auctionlab/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "auctionlab/errors.hpp"
#include "auctionlab/grids.hpp"
#include "auctionlab/simplex.hpp"

namespace auctionlab {

void FiniteTypeSpace::validate() const {
  if (types.empty() || types.size() != probs.size()) {
    throw ConfigError("type space: types/probs size mismatch");
  }
  if (types.size() > 64) throw SizeLimitError("type space: more than 64 types");
  if (k > 4) throw SizeLimitError("type space: k > 4");
  double total = 0.0;
  for (double p : probs) {
    if (p < 0.0) throw ConfigError("type space: negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) throw ConfigError("type space: probabilities must sum to 1");
  for (const auto& t : types) {
    if (t.k() != k) throw ConfigError("type space: mixed item counts");
  }
}

FiniteTypeSpace materialize_type_space(const DistributionSpec& spec) {
  FiniteTypeSpace ts;
  ts.k = spec.items.k();
  ts.product_hypothesis = true;

  std::vector<std::vector<double>> values;
  std::vector<std::vector<double>> probs;
  for (const auto& m : spec.items.marginals) {
    if (const auto* d = std::get_if<Discrete>(&m)) {
      values.push_back(d->values);
      probs.push_back(d->probs);
    } else if (const auto* c = std::get_if<Constant>(&m)) {
      values.push_back({c->value});
      probs.push_back({1.0});
    } else {
      throw ConfigError("materialize_type_space: needs finite-support marginals");
    }
  }

  std::vector<std::size_t> idx(ts.k, 0);
  while (true) {
    std::vector<double> draw(ts.k);
    double p = 1.0;
    for (int item = 0; item < ts.k; ++item) {
      draw[item] = values[item][idx[item]];
      p *= probs[item][idx[item]];
    }
    switch (spec.buyer_class) {
      case ValuationClass::additive: ts.types.push_back(Valuation::additive(draw)); break;
      case ValuationClass::unit_demand: ts.types.push_back(Valuation::unit_demand(draw)); break;
      case ValuationClass::table: {
        SubadditiveGenerator gen{spec.items, spec.combiner, spec.budget};
        ts.types.push_back(gen.build(draw));
        break;
      }
    }
    ts.probs.push_back(p);
    int d = ts.k;
    bool done = true;
    while (d > 0) {
      --d;
      if (++idx[d] < values[d].size()) {
        done = false;
        break;
      }
      idx[d] = 0;
    }
    if (done) break;
  }
  ts.validate();
  return ts;
}

namespace {

// Variable layout: per type t, q_{t,S} for S = 1..2^k-1, then pp_t, pm_t
// with payment p_t = pp_t - pm_t (payments are sign-free in the LP).
struct VarLayout {
  int num_types;
  int bundles;  // 2^k - 1 nonempty bundles
  int q(int t, Bundle s) const { return t * bundles + static_cast<int>(s) - 1; }
  int pp(int t) const { return num_types * bundles + 2 * t; }
  int pm(int t) const { return num_types * bundles + 2 * t + 1; }
  int total() const { return num_types * bundles + 2 * num_types; }
};

double menu_value(const Valuation& v, const MenuEntry& entry) {
  double total = 0.0;
  for (std::size_t s = 1; s < entry.lottery.size(); ++s) {
    if (entry.lottery[s] != 0.0) {
      total += entry.lottery[s] * v.bundle_value(static_cast<Bundle>(s));
    }
  }
  return total;
}

}  // namespace

MenuSolution lp_optimal_revenue(const FiniteTypeSpace& ts) {
  ts.validate();
  const int T = static_cast<int>(ts.types.size());
  const int nb = (1 << ts.k) - 1;
  VarLayout L{T, nb};

  LinearProgram lp;
  lp.c.assign(L.total(), 0.0);
  for (int t = 0; t < T; ++t) {
    lp.c[L.pp(t)] = ts.probs[t];
    lp.c[L.pm(t)] = -ts.probs[t];
  }

  auto add_row = [&](std::vector<double> row, double rhs) {
    lp.a.push_back(std::move(row));
    lp.b.push_back(rhs);
  };

  // Lottery mass: sum_S q_{t,S} <= 1.
  for (int t = 0; t < T; ++t) {
    std::vector<double> row(L.total(), 0.0);
    for (Bundle s = 1; s <= static_cast<Bundle>(nb); ++s) row[L.q(t, s)] = 1.0;
    add_row(std::move(row), 1.0);
  }

  // IR: -(sum_S q_{t,S} v_t(S) - p_t) <= 0.
  for (int t = 0; t < T; ++t) {
    std::vector<double> row(L.total(), 0.0);
    for (Bundle s = 1; s <= static_cast<Bundle>(nb); ++s) {
      row[L.q(t, s)] = -ts.types[t].bundle_value(s);
    }
    row[L.pp(t)] = 1.0;
    row[L.pm(t)] = -1.0;
    add_row(std::move(row), 0.0);
  }

  // IC: utility of t' menu entry for type t minus own utility <= 0.
  for (int t = 0; t < T; ++t) {
    for (int other = 0; other < T; ++other) {
      if (other == t) continue;
      std::vector<double> row(L.total(), 0.0);
      for (Bundle s = 1; s <= static_cast<Bundle>(nb); ++s) {
        double value = ts.types[t].bundle_value(s);
        row[L.q(other, s)] += value;
        row[L.q(t, s)] -= value;
      }
      row[L.pp(other)] -= 1.0;
      row[L.pm(other)] += 1.0;
      row[L.pp(t)] += 1.0;
      row[L.pm(t)] -= 1.0;
      add_row(std::move(row), 0.0);
    }
  }

  SimplexSolution sol = solve_lp(lp);

  MenuSolution out;
  out.revenue = sol.objective;
  out.menu.resize(T);
  for (int t = 0; t < T; ++t) {
    out.menu[t].lottery.assign(nb + 1, 0.0);
    for (Bundle s = 1; s <= static_cast<Bundle>(nb); ++s) {
      out.menu[t].lottery[s] = sol.x[L.q(t, s)];
    }
    out.menu[t].payment = sol.x[L.pp(t)] - sol.x[L.pm(t)];
  }

  // Re-check IC/IR constraint by constraint, independent of the solver.
  for (int t = 0; t < T; ++t) {
    double own = menu_value(ts.types[t], out.menu[t]) - out.menu[t].payment;
    out.max_ir_violation = std::max(out.max_ir_violation, -own);
    for (int other = 0; other < T; ++other) {
      if (other == t) continue;
      double deviate = menu_value(ts.types[t], out.menu[other]) - out.menu[other].payment;
      out.max_ic_violation = std::max(out.max_ic_violation, deviate - own);
    }
  }
  if (out.max_ic_violation > 1e-8 || out.max_ir_violation > 1e-8) {
    throw InvariantError("lp_optimal_revenue: solved menu violates IC/IR beyond 1e-8");
  }
  return out;
}

TypeSpacePricingBest best_pricings(const FiniteTypeSpace& ts) {
  ts.validate();
  TypeSpacePricingBest out;
  const Bundle all = full_bundle(ts.k);

  {
    std::vector<double> totals;
    totals.reserve(ts.types.size());
    for (const auto& v : ts.types) totals.push_back(v.bundle_value(all));
    double best = 0.0;
    for (double r : sorted_unique(totals)) {
      double rev = 0.0;
      for (std::size_t t = 0; t < ts.types.size(); ++t) {
        if (totals[t] >= r) rev += ts.probs[t] * r;
      }
      best = std::max(best, rev);
    }
    out.brev = best;
  }

  bool additive = true;
  for (const auto& v : ts.types) additive &= (v.cls() == ValuationClass::additive);

  if (additive) {
    double total = 0.0;
    for (int item = 0; item < ts.k; ++item) {
      std::vector<double> support;
      for (const auto& v : ts.types) support.push_back(v.item_value(item));
      double best = 0.0;
      for (double price : sorted_unique(support)) {
        double rev = 0.0;
        for (std::size_t t = 0; t < ts.types.size(); ++t) {
          if (ts.types[t].item_value(item) >= price) rev += ts.probs[t] * price;
        }
        best = std::max(best, rev);
      }
      total += best;
    }
    out.prev = total;
  } else {
    std::vector<std::vector<double>> coords(ts.k);
    for (int item = 0; item < ts.k; ++item) {
      std::vector<double> support;
      for (const auto& v : ts.types) support.push_back(v.item_value(item));
      coords[item] = candidate_set(std::move(support), {.infinity = true});
    }
    ProductGrid grid{coords};
    double best = 0.0;
    grid.for_each([&](const std::vector<double>& point) {
      ItemPriceVector prices(point.begin(), point.end());
      double rev = 0.0;
      for (std::size_t t = 0; t < ts.types.size(); ++t) {
        rev += ts.probs[t] * best_bundle(ts.types[t], prices, all).price_paid;
      }
      best = std::max(best, rev);
    });
    out.prev = best;
  }

  {
    std::vector<std::vector<double>> coords(ts.k);
    for (int item = 0; item < ts.k; ++item) {
      std::vector<double> support;
      for (const auto& v : ts.types) support.push_back(v.item_value(item));
      coords[item] = candidate_set(std::move(support), {.infinity = true});
    }
    ProductGrid grid{coords};
    double best = 0.0;
    grid.for_each([&](const std::vector<double>& point) {
      ItemPriceVector prices(point.begin(), point.end());
      double rev = 0.0;
      for (std::size_t t = 0; t < ts.types.size(); ++t) {
        rev += ts.probs[t] * run_reduced_item_pricing(ts.types[t], prices);
      }
      best = std::max(best, rev);
    });
    out.reduced_prev = best;
  }

  return out;
}

ApproxFactorReport verify_approx_factor(const FiniteTypeSpace& ts, double factor) {
  ApproxFactorReport report;
  report.factor = factor;
  report.product_hypothesis = ts.product_hypothesis;
  report.rev = lp_optimal_revenue(ts).revenue;
  TypeSpacePricingBest best = best_pricings(ts);
  report.brev = best.brev;
  report.prev = best.prev;
  report.reduced_prev = best.reduced_prev;
  report.factor_ok = factor * std::max(best.brev, best.prev) >= report.rev - 1e-8;
  return report;
}

}  // namespace auctionlab
