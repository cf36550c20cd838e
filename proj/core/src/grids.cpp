#include "auctionlab/grids.hpp"

#include <algorithm>
#include <limits>

namespace auctionlab {

std::vector<double> sorted_unique(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

std::vector<double> with_midpoints(const std::vector<double>& values) {
  std::vector<double> out;
  out.reserve(values.size() * 2);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out.push_back(0.5 * (values[i - 1] + values[i]));
    out.push_back(values[i]);
  }
  return out;
}

std::vector<double> candidate_set(std::vector<double> values, const GridOptions& opts) {
  std::vector<double> base = sorted_unique(std::move(values));
  std::vector<double> out = opts.midpoints ? with_midpoints(base) : base;
  if (opts.zero) out.push_back(0.0);
  if (opts.above_max >= 0.0) out.push_back(opts.above_max);
  if (opts.infinity) out.push_back(std::numeric_limits<double>::infinity());
  return sorted_unique(std::move(out));
}

ProductGrid::ProductGrid(std::vector<std::vector<double>> coords) : coords_(std::move(coords)) {
  size_ = coords_.empty() ? 0 : 1;
  for (const auto& c : coords_) {
    if (c.empty()) {
      size_ = 0;
      break;
    }
    size_ *= static_cast<std::uint64_t>(c.size());
  }
}

void ProductGrid::for_each(const std::function<void(const std::vector<double>&)>& fn) const {
  if (size_ == 0) return;
  std::vector<std::size_t> idx(coords_.size(), 0);
  std::vector<double> point(coords_.size());
  for (std::size_t d = 0; d < coords_.size(); ++d) point[d] = coords_[d][0];
  while (true) {
    fn(point);
    std::size_t d = coords_.size();
    while (d > 0) {
      --d;
      if (++idx[d] < coords_[d].size()) {
        point[d] = coords_[d][idx[d]];
        break;
      }
      idx[d] = 0;
      point[d] = coords_[d][0];
      if (d == 0) return;
    }
  }
}

}  // namespace auctionlab
