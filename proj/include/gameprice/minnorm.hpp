#pragma once

#include <vector>

namespace gameprice {

// Minimum-Euclidean-norm point of the polyhedron {x : rows[i] . x >= rhs[i]}.
// Dual active-set method: the multipliers solve a nonnegative least-squares
// problem and x is recovered as the active-row combination. Dimensions are
// expected to stay small (n <= ~10, a few hundred rows).
// Throws std::runtime_error when the polyhedron is empty or the iteration
// cap is exceeded.
std::vector<double> min_norm_point(const std::vector<std::vector<double>>& rows,
                                   const std::vector<double>& rhs,
                                   double tol = 1e-12, int max_iter = 1000);

}  // namespace gameprice
