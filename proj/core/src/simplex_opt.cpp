#include "qbet/simplex_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace qbet {

void project_to_simplex(std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<double> u = x;
  std::sort(u.begin(), u.end(), std::greater<double>());
  double css = 0.0, theta = 0.0;
  std::size_t rho = 0;
  for (std::size_t i = 0; i < n; ++i) {
    css += u[i];
    double t = (css - 1.0) / static_cast<double>(i + 1);
    if (u[i] - t > 0.0) {
      rho = i + 1;
      theta = t;
    }
  }
  (void)rho;
  for (double& xi : x) xi = std::max(0.0, xi - theta);
  // guard against accumulated drift
  double s = std::accumulate(x.begin(), x.end(), 0.0);
  if (s > 0.0)
    for (double& xi : x) xi /= s;
  else
    std::fill(x.begin(), x.end(), 1.0 / static_cast<double>(n));
}

namespace {

bool usable(double v) { return std::isfinite(v); }

// One projected-gradient ascent run from a given start.
void ascend(const SimplexObjective& f, const SimplexGradient& grad,
            const SimplexOptOptions& opts, std::vector<double>& x, double& fx, int& iters) {
  const std::size_t n = x.size();
  std::vector<double> g(n), trial(n), work(n);
  double step = opts.step_init;
  fx = f(x);
  int stall = 0;

  // asymmetric steps keep the minus probe in the positive orthant, where
  // boundary-divergent objectives stay evaluable
  auto numeric_gradient = [&](const std::vector<double>& at, double f_at,
                              std::vector<double>& out) {
    work = at;
    for (std::size_t i = 0; i < n; ++i) {
      double save = work[i];
      double hp = opts.fd_step;
      double hm = std::min(opts.fd_step, 0.5 * std::max(save, 0.0));
      work[i] = save + hp;
      double fp = f(work);
      double fm;
      if (hm > 0.0) {
        work[i] = save - hm;
        fm = f(work);
      } else {
        fm = f_at;
      }
      work[i] = save;
      out[i] = (usable(fp) && usable(fm)) ? (fp - fm) / (hp + hm) : 0.0;
    }
  };

  for (iters = 0; iters < opts.max_iters; ++iters) {
    if (grad)
      grad(x, g);
    else
      numeric_gradient(x, fx, g);

    bool improved = false;
    double t = step;
    for (int bt = 0; bt < 40; ++bt) {
      for (std::size_t i = 0; i < n; ++i) trial[i] = x[i] + t * g[i];
      project_to_simplex(trial);
      double ft = f(trial);
      if (usable(ft) && ft > fx) {
        double gain = ft - fx;
        x = trial;
        fx = ft;
        step = std::min(t * 1.5, 1e6);
        improved = true;
        if (gain < opts.value_tol * (1.0 + std::abs(fx)))
          ++stall;
        else
          stall = 0;
        break;
      }
      t *= 0.5;
    }
    if (!improved || stall >= 5) break;
  }
}

// Pairwise mass-transfer polish; robust at kinks and on boundaries.
void polish(const SimplexObjective& f, const SimplexOptOptions& opts, std::vector<double>& x,
            double& fx) {
  const std::size_t n = x.size();
  if (n < 2) return;
  std::vector<double> trial(n);
  for (double delta = 0.0625; delta >= opts.polish_step_min; delta *= 0.25) {
    bool any = true;
    int guard = 0;
    while (any && guard++ < 400) {
      any = false;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j) continue;
          if (x[i] < delta) break;  // accepted moves shrink x[i] mid-sweep
          trial = x;
          trial[i] -= delta;
          trial[j] += delta;
          double ft = f(trial);
          if (usable(ft) && ft > fx) {
            x = trial;
            fx = ft;
            any = true;
          }
        }
      }
    }
  }
}

}  // namespace

SimplexOptResult maximize_on_simplex(std::size_t dim, const SimplexObjective& f,
                                     const SimplexOptOptions& opts, const SimplexGradient& grad) {
  SimplexOptResult best;
  best.value = -std::numeric_limits<double>::infinity();
  best.x.assign(dim, 1.0 / static_cast<double>(dim));

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  std::vector<std::vector<double>> starts;
  for (const auto& s : opts.extra_starts) {
    if (s.size() != dim) continue;
    std::vector<double> v = s;
    project_to_simplex(v);
    starts.push_back(v);
  }
  starts.push_back(std::vector<double>(dim, 1.0 / static_cast<double>(dim)));
  if (opts.include_vertices) {
    for (std::size_t i = 0; i < dim && starts.size() < static_cast<std::size_t>(opts.num_starts);
         ++i) {
      // near-vertex, kept interior so boundary-divergent objectives stay usable
      std::vector<double> v(dim, 1e-4 / static_cast<double>(dim));
      v[i] = 1.0 - 1e-4 + v[i];
      project_to_simplex(v);
      starts.push_back(v);
    }
  }
  while (starts.size() < static_cast<std::size_t>(std::max(1, opts.num_starts))) {
    std::vector<double> d(dim);
    double s = 0.0;
    for (double& di : d) {
      di = -std::log(std::max(unif(rng), 1e-300));  // Dirichlet(1,...,1)
      s += di;
    }
    for (double& di : d) di /= s;
    starts.push_back(d);
  }

  // multimodal objectives: probe broadly first and keep the best few probes
  if (opts.presample > 0) {
    std::vector<std::pair<double, std::vector<double>>> probes;
    probes.reserve(opts.presample);
    for (int k = 0; k < opts.presample; ++k) {
      std::vector<double> d(dim);
      double s = 0.0;
      for (double& di : d) {
        di = -std::log(std::max(unif(rng), 1e-300));
        s += di;
      }
      for (double& di : d) di /= s;
      double v = f(d);
      if (usable(v)) probes.emplace_back(v, std::move(d));
    }
    std::sort(probes.begin(), probes.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t k = 0; k < probes.size() && k < 3; ++k)
      starts.push_back(probes[k].second);
  }

  int total_iters = 0;
  for (auto& x0 : starts) {
    std::vector<double> x = x0;
    double fx;
    int iters = 0;
    ascend(f, grad, opts, x, fx, iters);
    total_iters += iters;
    if (usable(fx) && fx > best.value) {
      best.x = x;
      best.value = fx;
    }
  }
  polish(f, opts, best.x, best.value);
  best.converged = std::isfinite(best.value);
  best.iterations = total_iters;
  return best;
}

SimplexOptResult minimize_on_simplex(std::size_t dim, const SimplexObjective& f,
                                     const SimplexOptOptions& opts, const SimplexGradient& grad) {
  auto neg = [&f](const std::vector<double>& x) {
    double v = f(x);
    return -v;
  };
  SimplexGradient ng = nullptr;
  if (grad) {
    ng = [&grad](const std::vector<double>& x, std::vector<double>& g) {
      grad(x, g);
      for (double& gi : g) gi = -gi;
    };
  }
  SimplexOptResult r = maximize_on_simplex(dim, neg, opts, ng);
  r.value = -r.value;
  return r;
}

}  // namespace qbet
