#ifndef QBET_SIMPLEX_OPT_HPP
#define QBET_SIMPLEX_OPT_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace qbet {

// Euclidean projection onto the probability simplex (Held-Wolfe-Crowder /
// sort-based variant).
void project_to_simplex(std::vector<double>& x);

using SimplexObjective = std::function<double(const std::vector<double>&)>;
using SimplexGradient =
    std::function<void(const std::vector<double>&, std::vector<double>&)>;

struct SimplexOptOptions {
  int max_iters = 10000;
  int num_starts = 20;        // uniform + vertices + random Dirichlet
  double step_init = 0.5;
  double fd_step = 1e-6;      // central-difference step when no gradient given
  double value_tol = 1e-15;   // relative stall tolerance
  double polish_step_min = 1e-12;
  std::uint64_t seed = 0;
  bool include_vertices = true;
  int presample = 0;  // Dirichlet probe count; the best few become starts
  std::vector<std::vector<double>> extra_starts;  // caller-supplied warm starts
};

struct SimplexOptResult {
  std::vector<double> x;
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
};

// Maximises f over the probability simplex of the given dimension by
// multi-start projected gradient ascent with backtracking, followed by a
// pairwise mass-transfer polish that also handles kinks. Infinite objective
// values are treated as out-of-bounds. Deterministic given options.seed.
SimplexOptResult maximize_on_simplex(std::size_t dim, const SimplexObjective& f,
                                     const SimplexOptOptions& opts = {},
                                     const SimplexGradient& grad = nullptr);

// Convenience wrapper: minimise f by maximising -f.
SimplexOptResult minimize_on_simplex(std::size_t dim, const SimplexObjective& f,
                                     const SimplexOptOptions& opts = {},
                                     const SimplexGradient& grad = nullptr);

}  // namespace qbet

#endif  // QBET_SIMPLEX_OPT_HPP
