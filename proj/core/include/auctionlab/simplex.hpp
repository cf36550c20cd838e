#pragma once

#include <vector>

namespace auctionlab {

// Dense primal simplex for  max c'x  s.t.  Ax <= b, x >= 0  with b >= 0,
// so the all-slack basis is feasible and no phase-1 is needed. Bland's rule
// guards against cycling on the degenerate (b = 0) rows the menu LP produces.
struct LinearProgram {
  std::vector<std::vector<double>> a;  // m rows, n cols
  std::vector<double> b;               // m, nonnegative
  std::vector<double> c;               // n
};

struct SimplexSolution {
  std::vector<double> x;
  double objective = 0.0;
  int iterations = 0;
};

// Throws InvariantError on an unbounded program or iteration blow-up; the
// menu LP is bounded by construction.
SimplexSolution solve_lp(const LinearProgram& lp);

}  // namespace auctionlab
