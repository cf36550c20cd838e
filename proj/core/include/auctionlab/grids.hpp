#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace auctionlab {

// Candidate price grids built from sample values. Revenue changes only when
// a price crosses a sample value, so sample values (optionally with the
// midpoints between adjacent distinct values, a zero floor, and sentinels)
// realize every purchase pattern a class can induce on a sample.

std::vector<double> sorted_unique(std::vector<double> values);

// values must be sorted unique; returns values plus midpoints interleaved.
std::vector<double> with_midpoints(const std::vector<double>& values);

struct GridOptions {
  bool midpoints = false;
  bool zero = false;
  bool infinity = false;       // "not for sale" sentinel
  double above_max = -1.0;     // if >= 0, append this value (e.g. H*k + 1)
};

std::vector<double> candidate_set(std::vector<double> values, const GridOptions& opts);

// Product grid over per-coordinate candidate sets.
class ProductGrid {
 public:
  explicit ProductGrid(std::vector<std::vector<double>> coords);

  std::uint64_t size() const { return size_; }
  std::size_t dims() const { return coords_.size(); }
  const std::vector<std::vector<double>>& coords() const { return coords_; }

  // Visits points in odometer order (last coordinate fastest); `point` is
  // reused between calls.
  void for_each(const std::function<void(const std::vector<double>&)>& fn) const;

 private:
  std::vector<std::vector<double>> coords_;
  std::uint64_t size_;
};

}  // namespace auctionlab
