#include "qbet/resource.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qbet/errors.hpp"
#include "qbet/random_instances.hpp"

namespace qbet {

double robustness_informativeness(const Povm& m) {
  double s = 0.0;
  for (const Matrix& e : m.elements()) s += std::max(max_eigenvalue(e), 0.0);
  return std::max(s - 1.0, 0.0);
}

double weight_informativeness(const Povm& m) {
  double s = 0.0;
  for (const Matrix& e : m.elements()) s += std::max(min_eigenvalue(e), 0.0);
  return std::min(std::max(1.0 - s, 0.0), 1.0);
}

namespace {

// Feasibility of robustness level r: some uninformative q with
// (1+r) q(a) I >= M_a and sum q = 1. Certified constructively.
bool robustness_feasible(const Povm& m, double r) {
  const int d = m.dim();
  double total = 0.0;
  std::vector<double> q(m.num_outcomes(), 0.0);
  for (std::size_t a = 0; a < m.num_outcomes(); ++a) {
    q[a] = std::max(max_eigenvalue(m.element(a)), 0.0) / (1.0 + r);
    total += q[a];
  }
  if (total > 1.0 + 1e-12) return false;
  // pad q to a PMF and verify the general-measurement witness is PSD
  double pad = (1.0 - total) / static_cast<double>(m.num_outcomes());
  if (r <= 0.0) return total <= 1.0 + 1e-12;
  for (std::size_t a = 0; a < m.num_outcomes(); ++a) {
    Matrix general = ((1.0 + r) * (q[a] + pad) * Matrix::Identity(d, d) - m.element(a)) / r;
    if (min_eigenvalue(general) < -1e-9) return false;
  }
  return true;
}

bool weight_feasible(const Povm& m, double w) {
  const int d = m.dim();
  if (w >= 1.0) return true;
  double total = 0.0;
  std::vector<double> cap(m.num_outcomes(), 0.0);
  for (std::size_t a = 0; a < m.num_outcomes(); ++a) {
    cap[a] = std::max(min_eigenvalue(m.element(a)), 0.0);
    total += cap[a];
  }
  if (total < (1.0 - w) - 1e-12) return false;
  if (w <= 0.0) return std::abs(total - 1.0) <= 1e-12;
  // shrink the caps into a sub-normalised q summing to 1 - w, then certify
  std::vector<double> q(cap);
  double excess = total - (1.0 - w);
  for (std::size_t a = 0; a < m.num_outcomes() && excess > 0.0; ++a) {
    double take = std::min(q[a], excess);
    q[a] -= take;
    excess -= take;
  }
  for (std::size_t a = 0; a < m.num_outcomes(); ++a) {
    Matrix general = (m.element(a) - q[a] * Matrix::Identity(d, d)) / w;
    if (min_eigenvalue(general) < -1e-9) return false;
  }
  return true;
}

}  // namespace

double robustness_bisection_oracle(const Povm& m, double tol) {
  double lo = 0.0, hi = 1.0;
  if (robustness_feasible(m, lo)) return 0.0;
  while (!robustness_feasible(m, hi)) hi *= 2.0;
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    (robustness_feasible(m, mid) ? hi : lo) = mid;
  }
  return hi;
}

double weight_bisection_oracle(const Povm& m, double tol) {
  double lo = 0.0, hi = 1.0;
  if (weight_feasible(m, lo)) return 0.0;
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    (weight_feasible(m, mid) ? hi : lo) = mid;
  }
  return hi;
}

double measured_sibson_div(const Povm& m, const Povm& n, const StateSet& s, const Order& alpha,
                           const MeasuredDivOptions& opts) {
  if (m.dim() != n.dim()) throw DimensionMismatch("measured_sibson_div: dimensions differ");
  if (m.num_outcomes() != n.num_outcomes())
    throw DimensionMismatch("measured_sibson_div: outcome counts differ");
  CondPmf p_gx = born_cond_pmf(m, s);
  CondPmf q_gx = born_cond_pmf(n, s);
  const std::size_t nx = s.size();

  auto objective = [&](const std::vector<double>& pv) {
    Pmf p = clamped_pmf(std::vector<double>(pv));
    return cond_renyi_div(CrdVariant::SIBSON, p_gx, q_gx, p, alpha);
  };

  // the objective is a monotone transform of a p-linear form, so vertices
  // are candidates for the maximum; the ascent covers the rest
  double best = -kInf;
  for (std::size_t x = 0; x < nx; ++x) {
    std::vector<double> v(nx, 0.0);
    v[x] = 1.0;
    best = std::max(best, objective(v));
  }
  SimplexOptOptions sopts;
  sopts.seed = opts.seed;
  sopts.num_starts = opts.num_starts;
  SimplexOptResult r = maximize_on_simplex(nx, objective, sopts);
  return std::max(best, r.value);
}

namespace {

// Sibson divergence of one Born row against q, needed by the min-max route.
double row_div(const CondPmf& p_gx, std::size_t x, const Pmf& q, const Order& alpha) {
  return renyi_div(p_gx.row(x), q, alpha);
}

}  // namespace

InformativenessResult informativeness_measure(const Povm& m, const StateSet& s,
                                              const Order& alpha,
                                              const InformativenessOptions& opts) {
  CondPmf p_gx = born_cond_pmf(m, s);
  const std::size_t nx = s.size();
  const std::size_t ng = m.num_outcomes();
  InformativenessResult out;
  out.witness_q = Pmf::uniform(ng);
  out.witness_p = Pmf::uniform(nx);

  // max over p of min over q = Sibson capacity of the Born conditional
  auto cap_obj = [&](const std::vector<double>& pv) {
    try {
      Pmf p = clamped_pmf(std::vector<double>(pv));
      return sibson_mi_closed_form(p_gx, p, alpha);
    } catch (const std::exception&) {
      return -kInf;
    }
  };
  SimplexOptOptions sopts2;
  sopts2.seed = opts.seed + 7;
  sopts2.num_starts = opts.num_starts;
  SimplexOptResult rp = maximize_on_simplex(nx, cap_obj, sopts2);
  out.max_min = std::max(rp.value, 0.0);
  out.witness_p = Pmf::normalized(std::vector<double>(rp.x));
  out.value = out.max_min;

  // min over q of max over p: the inner max of the Sibson divergence sits at
  // a vertex of the input simplex. The saddle output is the Sibson-optimal
  // q at the capacity achiever (the information-radius centre), which makes
  // the decisive warm start for the kinked outer minimisation.
  auto h = [&](const std::vector<double>& qv) {
    Pmf q = clamped_pmf(std::vector<double>(qv));
    double worst = -kInf;
    for (std::size_t x = 0; x < nx; ++x) worst = std::max(worst, row_div(p_gx, x, q, alpha));
    return worst;
  };
  SimplexOptOptions sopts;
  sopts.seed = opts.seed;
  sopts.num_starts = opts.num_starts;
  if (auto qstar = sibson_optimal_output(p_gx, out.witness_p, alpha))
    sopts.extra_starts.push_back(qstar->probs());
  if (alpha.classify() == OrderClass::ONE) {
    std::vector<double> qout(ng, 0.0);
    for (std::size_t g = 0; g < ng; ++g)
      for (std::size_t x = 0; x < nx; ++x) qout[g] += out.witness_p[x] * p_gx(x, g);
    sopts.extra_starts.push_back(qout);
  }
  if (!alpha.is_finite()) {
    std::vector<double> qext(ng, 0.0);
    for (std::size_t g = 0; g < ng; ++g) {
      double v = (alpha.value() > 0) ? 0.0 : kInf;
      for (std::size_t x = 0; x < nx; ++x)
        v = (alpha.value() > 0) ? std::max(v, p_gx(x, g)) : std::min(v, p_gx(x, g));
      qext[g] = std::isfinite(v) ? v : 0.0;
    }
    sopts.extra_starts.push_back(qext);
  }
  SimplexOptResult rq = minimize_on_simplex(ng, h, sopts);
  out.min_max = std::max(rq.value, 0.0);
  out.witness_q = Pmf::normalized(std::vector<double>(rq.x));

  if (opts.certify && std::isfinite(out.min_max) && std::isfinite(out.max_min) &&
      std::abs(out.min_max - out.max_min) > opts.minimax_tol) {
    throw MinimaxGapExceeded("informativeness_measure: Sion gap above tolerance", out.min_max,
                             out.max_min);
  }
  return out;
}

double informativeness_of_state_set(const Povm& m, const StateSet& s, const Order& alpha,
                                    std::uint64_t seed, int capacity_starts,
                                    std::vector<double>* warm_prior) {
  CondPmf p_gx = born_cond_pmf(m, s);
  auto cap_obj = [&](const std::vector<double>& pv) {
    try {
      Pmf p = clamped_pmf(std::vector<double>(pv));
      return sibson_mi_closed_form(p_gx, p, alpha);
    } catch (const std::exception&) {
      return -kInf;
    }
  };
  SimplexOptOptions sopts;
  sopts.seed = seed;
  sopts.num_starts = capacity_starts;
  if (warm_prior && warm_prior->size() == s.size()) sopts.extra_starts.push_back(*warm_prior);
  SimplexOptResult r = maximize_on_simplex(s.size(), cap_obj, sopts);
  if (warm_prior) *warm_prior = r.x;
  return std::max(r.value, 0.0);
}

namespace {

StateSet states_from_params(int d, std::size_t k, const std::vector<double>& params) {
  StateSet s;
  s.reserve(k);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < k; ++i) {
    Vector v(d);
    for (int c = 0; c < d; ++c) {
      v(c) = Cplx(params[idx], params[idx + 1]);
      idx += 2;
    }
    if (v.norm() < 1e-9) v(0) = 1.0;
    s.push_back(DensityMatrix::pure(v));
  }
  return s;
}

double sgn_d(double a) { return (a >= 0.0) ? 1.0 : -1.0; }

}  // namespace

AlphaMeasureResult alpha_measure(const Povm& m, const Order& alpha,
                                 const AlphaMeasureOptions& opts) {
  AlphaMeasureResult out;
  const int d = m.dim();

  if (alpha.classify() == OrderClass::POS_INF) {
    out.value = robustness_informativeness(m);
    out.e_alpha = std::log2(1.0 + out.value);
    return out;
  }
  if (alpha.classify() == OrderClass::NEG_INF) {
    out.value = weight_informativeness(m);
    out.e_alpha = -std::log2(1.0 - std::min(out.value, 1.0 - 1e-15));
    return out;
  }

  const std::size_t k = opts.set_size ? opts.set_size : static_cast<std::size_t>(d) * d;
  const std::size_t np = 2 * k * static_cast<std::size_t>(d);
  std::mt19937_64 rng(opts.seed ^ 0x5eedULL);
  std::normal_distribution<double> gauss(0.0, 1.0);

  // warm-started single-restart inner capacity keeps the outer ascent cheap
  std::vector<double> warm;
  auto eval = [&](const std::vector<double>& params, int starts) {
    try {
      StateSet s = states_from_params(d, k, params);
      return informativeness_of_state_set(m, s, alpha, opts.seed + 3, starts, &warm);
    } catch (const std::exception&) {
      return -kInf;
    }
  };

  double best = 0.0;
  std::vector<double> best_params(np, 0.0);
  bool have_params = false;
  std::vector<double> grad(np), trial(np);
  for (int start = 0; start < opts.num_starts; ++start) {
    std::vector<double> x(np);
    for (double& v : x) v = gauss(rng);
    warm.clear();
    double fx = eval(x, 2);
    if (!std::isfinite(fx)) continue;
    double step = 0.2;
    for (int it = 0; it < opts.max_iters; ++it) {
      double h = (it * 2 < opts.max_iters) ? 1e-5 : 1e-7;
      for (std::size_t i = 0; i < np; ++i) {
        double save = x[i];
        x[i] = save + h;
        double fp = eval(x, 1);
        x[i] = save;
        grad[i] = std::isfinite(fp) ? (fp - fx) / h : 0.0;
      }
      double gn = 0.0;
      for (double gi : grad) gn += gi * gi;
      gn = std::sqrt(gn);
      if (gn < 1e-11) break;
      bool improved = false;
      double t = step;
      for (int bt = 0; bt < 25; ++bt) {
        for (std::size_t i = 0; i < np; ++i) trial[i] = x[i] + t / gn * grad[i];
        double ft = eval(trial, 1);
        if (std::isfinite(ft) && ft > fx) {
          x = trial;
          fx = ft;
          step = std::min(t * 1.5, 5.0);
          improved = true;
          break;
        }
        t *= 0.5;
      }
      if (!improved || step < 1e-12) break;
    }
    // re-score the candidate with a full multi-start inner solve
    warm.clear();
    fx = eval(x, opts.capacity_starts);
    if (fx > best) {
      best = fx;
      best_params = x;
      have_params = true;
    }
  }
  out.e_alpha = best;
  out.witness = have_params ? states_from_params(d, k, best_params) : StateSet{};
  const double sa = sgn_d(alpha.value());
  out.value = sa * std::exp2(sa * out.e_alpha) - sa;
  return out;
}

MonotoneSuiteReport monotone_suite(const Povm& m, const MonotoneSuiteOptions& opts) {
  MonotoneSuiteReport report;
  RandomSource rs(opts.seed);

  // the fixed POVM's measure is loop-invariant per order: compute it once.
  // base[] holds E_alpha at finite orders and M_alpha at the extremes
  UninformativeWitness uw = is_uninformative(m, 1e-6);
  std::vector<double> base(opts.alphas.size(), 0.0);
  for (std::size_t ai = 0; ai < opts.alphas.size(); ++ai) {
    Order ord(opts.alphas[ai]);
    // the baseline must not be under-searched, or monotonicity would be
    // tested against a too-small right-hand side; triple the effort here
    AlphaMeasureOptions mo = opts.measure;
    mo.seed = opts.seed + 17 + ai;
    mo.num_starts = 3 * std::max(1, opts.measure.num_starts);
    mo.max_iters = 2 * std::max(1, opts.measure.max_iters);
    AlphaMeasureResult r = ord.is_finite() ? alpha_measure(m, ord, mo) : alpha_measure(m, ord);
    base[ai] = ord.is_finite() ? r.e_alpha : r.value;

    // faithfulness probe
    MonotoneTrial t;
    t.alpha = opts.alphas[ai];
    t.trial = -1;
    t.original = r.value;
    t.simulated = r.value;
    t.pass = uw.uninformative ? (r.value <= 1e-6) : true;
    report.trials.push_back(t);
    report.all_pass = report.all_pass && t.pass;
  }

  for (int trial = 0; trial < opts.trials; ++trial) {
    std::size_t out_sym = 2 + (rs.bits() % m.num_outcomes());
    CondPmf post = random_cond_pmf(rs, m.num_outcomes(), out_sym, false);
    Povm simulated = simulate_measurement(m, post);
    for (std::size_t ai = 0; ai < opts.alphas.size(); ++ai) {
      double a = opts.alphas[ai];
      Order ord(a);
      MonotoneTrial t;
      t.alpha = a;
      t.trial = trial;
      if (!ord.is_finite()) {
        t.simulated = alpha_measure(simulated, ord).value;
        t.original = base[ai];
      } else {
        AlphaMeasureOptions mo = opts.measure;
        mo.seed = opts.seed + 1000 * (trial + 1) + ai;
        AlphaMeasureResult sim = alpha_measure(simulated, ord, mo);
        double em = base[ai];
        if (sim.e_alpha > em + 0.5 * opts.slack && !sim.witness.empty()) {
          // witness exchange: score the fixed POVM on the simulated side's
          // best state set, so a search shortfall cannot fake a violation
          em = std::max(em, informativeness_of_state_set(m, sim.witness, ord, opts.seed + 5,
                                                         opts.measure.capacity_starts));
        }
        const double sa = sgn_d(a);
        t.simulated = sa * std::exp2(sa * sim.e_alpha) - sa;
        t.original = sa * std::exp2(sa * em) - sa;
      }
      t.pass = t.simulated <= t.original + opts.slack;
      report.trials.push_back(t);
      report.all_pass = report.all_pass && t.pass;
    }
  }
  return report;
}

}  // namespace qbet
