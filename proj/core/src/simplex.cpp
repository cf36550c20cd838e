#include "auctionlab/simplex.hpp"

#include <cmath>
#include <limits>

#include "auctionlab/errors.hpp"

namespace auctionlab {

namespace {
constexpr double kEps = 1e-9;
}

SimplexSolution solve_lp(const LinearProgram& lp) {
  const int m = static_cast<int>(lp.b.size());
  const int n = static_cast<int>(lp.c.size());
  for (int r = 0; r < m; ++r) {
    if (lp.b[r] < 0.0) throw InvariantError("solve_lp: requires b >= 0");
    if (static_cast<int>(lp.a[r].size()) != n) throw InvariantError("solve_lp: ragged matrix");
  }

  // Tableau over structural + slack columns; last column is the rhs.
  const int cols = n + m + 1;
  std::vector<std::vector<double>> t(m + 1, std::vector<double>(cols, 0.0));
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j < n; ++j) t[r][j] = lp.a[r][j];
    t[r][n + r] = 1.0;
    t[r][cols - 1] = lp.b[r];
  }
  for (int j = 0; j < n; ++j) t[m][j] = -lp.c[j];

  std::vector<int> basis(m);
  for (int r = 0; r < m; ++r) basis[r] = n + r;

  const long max_iterations = 2000L + 200L * static_cast<long>(m + n) * 10L;
  SimplexSolution sol;
  for (long iter = 0;; ++iter) {
    if (iter > max_iterations) throw InvariantError("solve_lp: iteration limit exceeded");

    // Bland: entering column = lowest index with negative reduced cost.
    int pivot_col = -1;
    for (int j = 0; j < cols - 1; ++j) {
      if (t[m][j] < -kEps) {
        pivot_col = j;
        break;
      }
    }
    if (pivot_col < 0) {
      sol.iterations = static_cast<int>(iter);
      break;
    }

    // Ratio test; Bland tie-break on the smallest basis index.
    int pivot_row = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int r = 0; r < m; ++r) {
      if (t[r][pivot_col] > kEps) {
        double ratio = t[r][cols - 1] / t[r][pivot_col];
        if (ratio < best_ratio - kEps ||
            (ratio < best_ratio + kEps && (pivot_row < 0 || basis[r] < basis[pivot_row]))) {
          best_ratio = ratio;
          pivot_row = r;
        }
      }
    }
    if (pivot_row < 0) throw InvariantError("solve_lp: unbounded program");

    double inv = 1.0 / t[pivot_row][pivot_col];
    for (int j = 0; j < cols; ++j) t[pivot_row][j] *= inv;
    for (int r = 0; r <= m; ++r) {
      if (r == pivot_row) continue;
      double factor = t[r][pivot_col];
      if (factor == 0.0) continue;
      for (int j = 0; j < cols; ++j) t[r][j] -= factor * t[pivot_row][j];
    }
    basis[pivot_row] = pivot_col;
  }

  sol.x.assign(n, 0.0);
  for (int r = 0; r < m; ++r) {
    if (basis[r] < n) sol.x[basis[r]] = t[r][cols - 1];
  }
  sol.objective = t[m][cols - 1];
  return sol;
}

}  // namespace auctionlab
