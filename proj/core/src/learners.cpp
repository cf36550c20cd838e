#include "auctionlab/learners.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "auctionlab/errors.hpp"
#include "auctionlab/grids.hpp"
#include "auctionlab/rng.hpp"

namespace auctionlab {

namespace {

void require_single_buyer(const SampleSet& samples, const char* what) {
  if (samples.m() == 0) throw ConfigError(std::string(what) + ": empty sample");
  if (samples.n() != 1) throw ConfigError(std::string(what) + ": needs single-buyer samples");
}

std::vector<double> sample_totals(const SampleSet& samples) {
  std::vector<double> totals;
  totals.reserve(samples.m());
  for (const auto& p : samples.profiles) {
    totals.push_back(p.buyers[0].bundle_value(full_bundle(p.k())));
  }
  return totals;
}

}  // namespace

std::string to_string(SearchMode m) {
  switch (m) {
    case SearchMode::exact_grid: return "EXACT_GRID";
    case SearchMode::exhaustive_product: return "EXHAUSTIVE_PRODUCT";
    case SearchMode::hill_climb: return "HILL_CLIMB";
  }
  return "?";
}

ErmResult erm_bundle_pricing(const SampleSet& samples) {
  require_single_buyer(samples, "erm_bundle_pricing");
  std::vector<double> totals = sample_totals(samples);
  std::vector<double> candidates = sorted_unique(totals);

  ErmResult out;
  out.search_mode = SearchMode::exact_grid;
  double best_total = -1.0;
  double best_price = 0.0;
  for (double r : candidates) {
    double total = 0.0;
    for (double t : totals) {
      if (t >= r) total += r;
    }
    ++out.candidates_examined;
    if (total > best_total) {  // ascending scan: ties keep the smaller price
      best_total = total;
      best_price = r;
    }
  }
  out.chosen = AnonBundle{best_price};
  out.empirical_mean_revenue = best_total / samples.m();
  return out;
}

ErmResult erm_item_pricing_additive(const SampleSet& samples) {
  require_single_buyer(samples, "erm_item_pricing_additive");
  if (samples.profiles.front().cls() != ValuationClass::additive) {
    throw ConfigError("erm_item_pricing_additive: needs additive samples");
  }
  const int k = samples.k();
  ItemPriceVector prices(k, 0.0);
  double total_revenue = 0.0;
  ErmResult out;
  out.search_mode = SearchMode::exact_grid;
  for (int item = 0; item < k; ++item) {
    std::vector<double> values;
    values.reserve(samples.m());
    for (const auto& p : samples.profiles) values.push_back(p.value(0, item));
    std::vector<double> candidates = sorted_unique(values);
    double best = -1.0, best_price = 0.0;
    for (double price : candidates) {
      double rev = 0.0;
      for (double v : values) {
        if (v >= price) rev += price;
      }
      ++out.candidates_examined;
      if (rev > best) {
        best = rev;
        best_price = price;
      }
    }
    prices[item] = best_price;
    total_revenue += best;
  }
  out.chosen = AnonItem{prices};
  out.empirical_mean_revenue = total_revenue / samples.m();
  return out;
}

namespace {

Mechanism make_item_mechanism(int n, int k, const std::vector<double>& flat) {
  if (n == 1) return AnonItem{ItemPriceVector(flat.begin(), flat.end())};
  IndItem rule;
  rule.rows.reserve(n);
  for (int i = 0; i < n; ++i) {
    rule.rows.emplace_back(flat.begin() + i * k, flat.begin() + (i + 1) * k);
  }
  return rule;
}

double item_grid_objective(const SampleSet& samples, int n, int k,
                           const std::vector<double>& flat) {
  Mechanism mech = make_item_mechanism(n, k, flat);
  double total = 0.0;
  for (const auto& profile : samples.profiles) total += mechanism_revenue(profile, mech);
  return total / samples.m();
}

}  // namespace

ErmResult erm_item_pricing_general(const SampleSet& samples, const GeneralErmOptions& opts) {
  if (samples.m() == 0) throw ConfigError("erm_item_pricing_general: empty sample");
  const int n = samples.n();
  const int k = samples.k();

  // One candidate list shared by every coordinate: all item values seen in
  // the sample (purchases may hinge on cross-item price differences), plus
  // the not-for-sale sentinel.
  std::vector<double> pooled;
  for (const auto& profile : samples.profiles) {
    for (int i = 0; i < n; ++i) {
      for (int item = 0; item < k; ++item) pooled.push_back(profile.value(i, item));
    }
  }
  std::vector<double> candidates = candidate_set(std::move(pooled), {.infinity = true});
  const int dims = n * k;
  std::vector<std::vector<double>> coords(dims, candidates);

  ErmResult out;
  out.search_mode = opts.mode;

  if (opts.mode == SearchMode::exhaustive_product) {
    if (dims > 12) throw SizeLimitError("erm_item_pricing_general: n*k > 12 in exhaustive mode");
    ProductGrid grid{coords};
    if (grid.size() > opts.max_grid_points) {
      throw SizeLimitError("erm_item_pricing_general: candidate grid too large");
    }
    double best = -1.0;
    std::vector<double> best_point;
    grid.for_each([&](const std::vector<double>& point) {
      double mean = item_grid_objective(samples, n, k, point);
      ++out.candidates_examined;
      if (mean > best) {  // grid order is lexicographic: first max is lex-least
        best = mean;
        best_point = point;
      }
    });
    out.chosen = make_item_mechanism(n, k, best_point);
    out.empirical_mean_revenue = best;
    return out;
  }

  // Coordinate ascent over the same per-coordinate candidates.
  double best = -1.0;
  std::vector<double> best_point;
  const int restarts = opts.start ? 1 : std::max(1, opts.restarts);
  for (int restart = 0; restart < restarts; ++restart) {
    std::vector<double> point(dims);
    if (opts.start) {
      point = *opts.start;
      if (static_cast<int>(point.size()) != dims) {
        throw ConfigError("erm_item_pricing_general: start point has wrong dimension");
      }
    } else {
      for (int d = 0; d < dims; ++d) {
        point[d] = candidates[rng::below(opts.seed,
                                         {static_cast<std::uint64_t>(restart),
                                          static_cast<std::uint64_t>(d)},
                                         candidates.size())];
      }
    }
    double current = item_grid_objective(samples, n, k, point);
    ++out.candidates_examined;
    bool moved = true;
    while (moved) {
      moved = false;
      for (int d = 0; d < dims; ++d) {
        double keep = point[d];
        double best_val = keep;
        double best_here = current;
        for (double c : coords[d]) {
          if (c == keep) continue;
          point[d] = c;
          double mean = item_grid_objective(samples, n, k, point);
          ++out.candidates_examined;
          if (mean > best_here) {
            best_here = mean;
            best_val = c;
          }
        }
        point[d] = best_val;
        if (best_here > current) {
          current = best_here;
          moved = true;
        }
      }
    }
    if (current > best) {
      best = current;
      best_point = point;
    }
  }
  out.chosen = make_item_mechanism(n, k, best_point);
  out.empirical_mean_revenue = best;
  return out;
}

ReducedErmResult erm_reduced_item_pricing(const SampleSet& samples,
                                          const GeneralErmOptions& opts) {
  require_single_buyer(samples, "erm_reduced_item_pricing");
  const int k = samples.k();
  if (k > 12 && opts.mode == SearchMode::exhaustive_product) {
    throw SizeLimitError("erm_reduced_item_pricing: k > 12 in exhaustive mode");
  }

  std::vector<std::vector<double>> coords(k);
  for (int item = 0; item < k; ++item) {
    std::vector<double> values;
    values.reserve(samples.m());
    for (const auto& p : samples.profiles) values.push_back(p.buyers[0].item_value(item));
    coords[item] = candidate_set(std::move(values), {.infinity = true});
  }

  auto reduced_objective = [&](const std::vector<double>& point) {
    double total = 0.0;
    ItemPriceVector prices(point.begin(), point.end());
    for (const auto& p : samples.profiles) {
      total += run_reduced_item_pricing(p.buyers[0], prices);
    }
    return total / samples.m();
  };

  ReducedErmResult out;
  out.result.search_mode = opts.mode;
  ProductGrid grid{coords};
  if (grid.size() > opts.max_grid_points) {
    throw SizeLimitError("erm_reduced_item_pricing: candidate grid too large");
  }
  double best = -1.0;
  std::vector<double> best_point;
  grid.for_each([&](const std::vector<double>& point) {
    double mean = reduced_objective(point);
    ++out.result.candidates_examined;
    if (mean > best) {
      best = mean;
      best_point = point;
    }
  });

  ItemPriceVector prices(best_point.begin(), best_point.end());
  out.result.chosen = AnonItem{prices};
  out.result.empirical_mean_revenue = best;
  double full = 0.0;
  for (const auto& p : samples.profiles) {
    full += best_bundle(p.buyers[0], prices, full_bundle(k)).price_paid;
  }
  out.full_mean_revenue = full / samples.m();
  return out;
}

namespace {

struct ModifiedSamples {
  std::vector<BetaThresholds> beta;   // per sample
  std::vector<ModifiedProfile> vbar;  // per sample
};

ModifiedSamples modify_all(const SampleSet& samples) {
  ModifiedSamples out;
  out.beta.reserve(samples.m());
  out.vbar.reserve(samples.m());
  for (const auto& p : samples.profiles) {
    out.beta.push_back(compute_beta(p));
    out.vbar.push_back(modify_bids(p));
  }
  return out;
}

}  // namespace

PipelineResult erm_multi_additive_pipeline(const SampleSet& samples) {
  if (samples.m() == 0) throw ConfigError("erm_multi_additive_pipeline: empty sample");
  if (samples.n() < 2) throw ConfigError("erm_multi_additive_pipeline: needs n >= 2");
  if (samples.profiles.front().cls() != ValuationClass::additive) {
    throw ConfigError("erm_multi_additive_pipeline: needs additive samples");
  }
  const int n = samples.n();
  const int k = samples.k();
  const int m = samples.m();
  ModifiedSamples mod = modify_all(samples);

  PipelineResult out;
  RestrictedComposed composed;
  composed.per_buyer.reserve(n);

  for (int i = 0; i < n; ++i) {
    // Restricted item row: decomposes per item on the modified bids.
    ItemPriceVector row(k, 0.0);
    double item_total = 0.0;
    for (int item = 0; item < k; ++item) {
      std::vector<double> values;
      for (const auto& p : samples.profiles) {
        for (int b = 0; b < n; ++b) values.push_back(p.value(b, item));
      }
      std::vector<double> candidates = candidate_set(std::move(values), {.infinity = true});
      double best = -1.0, best_price = 0.0;
      for (double price : candidates) {
        double rev = 0.0;
        for (int j = 0; j < m; ++j) {
          double vb = mod.vbar[j].vbar[i][item];
          if (vb <= 0.0) continue;
          double restricted = std::max(price, mod.beta[j].beta[i][item]);
          if (vb >= restricted) rev += restricted;
        }
        if (rev > best) {
          best = rev;
          best_price = price;
        }
      }
      row[item] = best_price;
      item_total += best;
    }
    double item_mean = item_total / m;

    // Restricted bundle price.
    std::vector<double> candidates;
    candidates.push_back(0.0);
    for (int j = 0; j < m; ++j) {
      double vbar_total = 0.0, beta_total = 0.0;
      for (int item = 0; item < k; ++item) {
        double vb = mod.vbar[j].vbar[i][item];
        if (vb > 0.0) {
          vbar_total += vb;
          beta_total += mod.beta[j].beta[i][item];
        }
      }
      candidates.push_back(vbar_total);
      candidates.push_back(beta_total);
    }
    candidates = sorted_unique(std::move(candidates));
    double bundle_best = -1.0, bundle_price = 0.0;
    for (double r : candidates) {
      double rev = 0.0;
      for (int j = 0; j < m; ++j) {
        double vbar_total = 0.0, beta_total = 0.0;
        bool any = false;
        for (int item = 0; item < k; ++item) {
          double vb = mod.vbar[j].vbar[i][item];
          if (vb > 0.0) {
            any = true;
            vbar_total += vb;
            beta_total += mod.beta[j].beta[i][item];
          }
        }
        if (!any) continue;
        double restricted = std::max(beta_total, r);
        if (vbar_total >= restricted) rev += restricted;
      }
      if (rev > bundle_best) {
        bundle_best = rev;
        bundle_price = r;
      }
    }
    double bundle_mean = bundle_best / m;

    PipelineBuyerChoice choice;
    choice.item_mean = item_mean;
    choice.bundle_mean = bundle_mean;
    if (item_mean >= bundle_mean) {
      choice.choice = BuyerItemRow{row};
    } else {
      choice.choice = BuyerBundlePrice{bundle_price};
    }
    composed.per_buyer.push_back(choice.choice);
    out.per_buyer.push_back(std::move(choice));
  }

  std::vector<Mechanism> finalists{Mechanism{composed}, Mechanism{SecondPrice{}}};
  MaxMechResult pick = max_mech(finalists, samples.profiles);
  out.composed_mean = pick.mean_revenues[0];
  out.sp_mean = pick.mean_revenues[1];
  out.chosen = finalists[pick.chosen_index];
  return out;
}

// ---- exact expectations -----------------------------------------------------

namespace {

struct SupportList {
  std::vector<std::vector<double>> draws;  // per type: k item values/attributes
  std::vector<double> probs;
};

SupportList enumerate_item_draws(const ProductDistribution& dist, std::uint64_t cap) {
  std::uint64_t size = 1;
  std::vector<std::vector<double>> values;
  std::vector<std::vector<double>> probs;
  for (const auto& m : dist.marginals) {
    if (const auto* d = std::get_if<Discrete>(&m)) {
      values.push_back(d->values);
      probs.push_back(d->probs);
    } else if (const auto* c = std::get_if<Constant>(&m)) {
      values.push_back({c->value});
      probs.push_back({1.0});
    } else {
      throw SizeLimitError("exact expectation needs finite-support marginals");
    }
    size *= values.back().size();
    if (size > cap) throw SizeLimitError("finite support too large");
  }
  SupportList out;
  out.draws.reserve(size);
  out.probs.reserve(size);
  const int k = dist.k();
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    std::vector<double> draw(k);
    double p = 1.0;
    for (int item = 0; item < k; ++item) {
      draw[item] = values[item][idx[item]];
      p *= probs[item][idx[item]];
    }
    out.draws.push_back(std::move(draw));
    out.probs.push_back(p);
    int d = k;
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
  return out;
}

Valuation build_valuation(const DistributionSpec& spec, const std::vector<double>& draws) {
  switch (spec.buyer_class) {
    case ValuationClass::additive: return Valuation::additive(draws);
    case ValuationClass::unit_demand: return Valuation::unit_demand(draws);
    case ValuationClass::table: {
      SubadditiveGenerator gen{spec.items, spec.combiner, spec.budget};
      return gen.build(draws);
    }
  }
  throw InvariantError("unreachable buyer class");
}

constexpr std::uint64_t kSupportCap = 1'000'000;

}  // namespace

double true_revenue(const Mechanism& mech, const DistributionSpec& spec, int n) {
  if (n < 1) throw ConfigError("true_revenue: n must be >= 1");
  SupportList types = enumerate_item_draws(spec.items, kSupportCap);
  const std::uint64_t s = types.draws.size();
  double total_profiles = 1.0;
  for (int i = 0; i < n; ++i) {
    total_profiles *= static_cast<double>(s);
    if (total_profiles > static_cast<double>(kSupportCap)) {
      throw SizeLimitError("true_revenue: profile support too large");
    }
  }

  std::vector<Valuation> type_valuations;
  type_valuations.reserve(s);
  for (const auto& d : types.draws) type_valuations.push_back(build_valuation(spec, d));

  std::vector<std::size_t> idx(n, 0);
  double expectation = 0.0;
  while (true) {
    ValuationProfile profile;
    profile.buyers.reserve(n);
    double p = 1.0;
    for (int i = 0; i < n; ++i) {
      profile.buyers.push_back(type_valuations[idx[i]]);
      p *= types.probs[idx[i]];
    }
    expectation += p * mechanism_revenue(profile, mech);
    int d = n;
    bool done = true;
    while (d > 0) {
      --d;
      if (++idx[d] < s) {
        done = false;
        break;
      }
      idx[d] = 0;
    }
    if (done) break;
  }
  return expectation;
}

BrevPrevResult exact_brev_prev(const DistributionSpec& spec) {
  if (spec.items.k() > 6) throw SizeLimitError("exact_brev_prev: k > 6");
  SupportList types = enumerate_item_draws(spec.items, kSupportCap);
  const int k = spec.items.k();
  std::vector<Valuation> vals;
  vals.reserve(types.draws.size());
  for (const auto& d : types.draws) vals.push_back(build_valuation(spec, d));

  BrevPrevResult out;

  // Bundle pricing: candidates are the support totals.
  {
    std::vector<double> totals;
    totals.reserve(vals.size());
    for (const auto& v : vals) totals.push_back(v.bundle_value(full_bundle(k)));
    double best = -1.0, best_price = 0.0;
    for (double r : sorted_unique(totals)) {
      double rev = 0.0;
      for (std::size_t t = 0; t < vals.size(); ++t) {
        if (totals[t] >= r) rev += types.probs[t] * r;
      }
      if (rev > best) {
        best = rev;
        best_price = r;
      }
    }
    out.brev = std::max(best, 0.0);
    out.brev_rule = AnonBundle{best_price};
  }

  if (spec.buyer_class == ValuationClass::additive) {
    // Per-item decomposition is exact for an additive buyer.
    ItemPriceVector prices(k, 0.0);
    double total = 0.0;
    for (int item = 0; item < k; ++item) {
      std::vector<double> support;
      for (const auto& v : vals) support.push_back(v.item_value(item));
      double best = -1.0, best_price = 0.0;
      for (double price : sorted_unique(support)) {
        double rev = 0.0;
        for (std::size_t t = 0; t < vals.size(); ++t) {
          if (vals[t].item_value(item) >= price) rev += types.probs[t] * price;
        }
        if (rev > best) {
          best = rev;
          best_price = price;
        }
      }
      prices[item] = best_price;
      total += best;
    }
    out.prev = total;
    out.prev_rule = AnonItem{prices};
  } else {
    std::vector<std::vector<double>> coords(k);
    for (int item = 0; item < k; ++item) {
      std::vector<double> support;
      for (const auto& v : vals) support.push_back(v.item_value(item));
      coords[item] = candidate_set(std::move(support), {.infinity = true});
    }
    ProductGrid grid{coords};
    if (grid.size() > 2'000'000) throw SizeLimitError("exact_brev_prev: price grid too large");
    double best = -1.0;
    std::vector<double> best_point;
    grid.for_each([&](const std::vector<double>& point) {
      ItemPriceVector prices(point.begin(), point.end());
      double rev = 0.0;
      for (std::size_t t = 0; t < vals.size(); ++t) {
        rev += types.probs[t] * best_bundle(vals[t], prices, full_bundle(k)).price_paid;
      }
      if (rev > best) {
        best = rev;
        best_point = point;
      }
    });
    out.prev = best;
    out.prev_rule = AnonItem{ItemPriceVector(best_point.begin(), best_point.end())};
  }

  // Reduced item pricing: product grid over per-item support values.
  {
    std::vector<std::vector<double>> coords(k);
    for (int item = 0; item < k; ++item) {
      std::vector<double> support;
      for (const auto& v : vals) support.push_back(v.item_value(item));
      coords[item] = candidate_set(std::move(support), {.infinity = true});
    }
    ProductGrid grid{coords};
    if (grid.size() > 2'000'000) throw SizeLimitError("exact_brev_prev: price grid too large");
    double best = -1.0;
    std::vector<double> best_point;
    grid.for_each([&](const std::vector<double>& point) {
      ItemPriceVector prices(point.begin(), point.end());
      double rev = 0.0;
      for (std::size_t t = 0; t < vals.size(); ++t) {
        rev += types.probs[t] * run_reduced_item_pricing(vals[t], prices);
      }
      if (rev > best) {
        best = rev;
        best_point = point;
      }
    });
    out.reduced_prev = best;
    out.reduced_prev_rule = AnonItem{ItemPriceVector(best_point.begin(), best_point.end())};
  }

  return out;
}

SampleBoundResult sample_bound(const SampleBoundQuery& q) {
  if (q.epsilon <= 0.0 || q.delta <= 0.0 || q.delta > 1.0) {
    throw ConfigError("sample_bound: need epsilon > 0 and delta in (0, 1]");
  }
  if (q.ceiling <= 0.0 || q.pseudo_dimension <= 0.0) {
    throw ConfigError("sample_bound: need H > 0 and pd > 0");
  }
  if (q.epsilon >= q.ceiling) {
    throw ConfigError("sample_bound: epsilon >= H makes the bound vacuous");
  }
  double ratio = q.ceiling / q.epsilon;
  double raw = ratio * ratio * (q.pseudo_dimension * std::log(ratio) + std::log(1.0 / q.delta));
  SampleBoundResult out;
  out.m = static_cast<std::uint64_t>(std::ceil(raw));
  out.note =
      "order-of-magnitude bound with the leading constant fixed to 1; "
      "the guarantee is asymptotic, not exact";
  return out;
}

}  // namespace auctionlab
