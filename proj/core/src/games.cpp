#include "qbet/games.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qbet/entropy.hpp"

namespace qbet {

FreeSet FreeSet::uninformative_measurements() {
  return FreeSet(FreeSetKind::UNINFORMATIVE_MEASUREMENTS);
}
FreeSet FreeSet::constant_channels() { return FreeSet(FreeSetKind::CONSTANT_CHANNELS); }
FreeSet FreeSet::explicit_measurements(std::vector<Povm> ms) {
  if (ms.empty()) throw EmptyFreeSet("FreeSet: explicit measurement list is empty");
  FreeSet f(FreeSetKind::EXPLICIT_MEASUREMENTS);
  f.povms_ = std::move(ms);
  return f;
}
FreeSet FreeSet::explicit_channels(std::vector<KrausChannel> ns) {
  if (ns.empty()) throw EmptyFreeSet("FreeSet: explicit channel list is empty");
  FreeSet f(FreeSetKind::EXPLICIT_CHANNELS);
  f.channels_ = std::move(ns);
  return f;
}
FreeSet FreeSet::explicit_states(std::vector<DensityMatrix> states) {
  if (states.empty()) throw EmptyFreeSet("FreeSet: explicit state list is empty");
  FreeSet f(FreeSetKind::EXPLICIT_STATES);
  f.states_ = std::move(states);
  return f;
}

namespace {

JointPmf born_joint(const Ensemble& e, const Povm& m) {
  return JointPmf::from_conditional(born_cond_pmf(m, e.states), e.priors);
}

JointPmf noisy_born_joint(const Ensemble& e, const Povm& m, const KrausChannel& n) {
  StateSet out;
  out.reserve(e.states.size());
  for (const auto& rho : e.states) out.push_back(apply_channel(n, rho));
  return JointPmf::from_conditional(born_cond_pmf(m, out), e.priors);
}

}  // namespace

double arimoto_mi_quantum(const Ensemble& e, const Povm& m, const Order& alpha) {
  return arimoto_mi(born_joint(e, m), alpha);
}

double noisy_arimoto_mi(const Ensemble& e, const Povm& m, const KrausChannel& n,
                        const Order& alpha) {
  return arimoto_mi(noisy_born_joint(e, m, n), alpha);
}

namespace {

Povm povm_from_params(int d, std::size_t outcomes, const std::vector<double>& params) {
  std::vector<Matrix> raw;
  raw.reserve(outcomes);
  Matrix s = Matrix::Zero(d, d);
  std::size_t idx = 0;
  for (std::size_t g = 0; g < outcomes; ++g) {
    Matrix a(d, d);
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) {
        a(i, k) = Cplx(params[idx], params[idx + 1]);
        idx += 2;
      }
    Matrix psd = a * a.adjoint();
    raw.push_back(psd);
    s += psd;
  }
  s += 1e-12 * Matrix::Identity(d, d);
  Matrix isq = herm_inv_sqrt(s);
  std::vector<Matrix> els;
  els.reserve(outcomes);
  for (Matrix& r : raw) {
    Matrix e = isq * r * isq;
    e = 0.5 * (e + e.adjoint().eval());
    els.push_back(std::move(e));
  }
  return Povm(std::move(els));
}

}  // namespace

PovmAscentResult maximize_over_povms(int dim, std::size_t outcomes,
                                     const std::function<double(const Povm&)>& objective,
                                     const PovmAscentOptions& opts) {
  const std::size_t np = 2 * outcomes * static_cast<std::size_t>(dim) * dim;
  std::mt19937_64 rng(opts.seed ^ 0xa5a5a5a5ULL);
  std::normal_distribution<double> gauss(0.0, 1.0);

  auto eval = [&](const std::vector<double>& params) {
    try {
      return objective(povm_from_params(dim, outcomes, params));
    } catch (const std::exception&) {
      return -kInf;
    }
  };

  PovmAscentResult best;
  std::vector<double> grad(np), trial(np);
  for (int start = 0; start < opts.num_starts; ++start) {
    std::vector<double> x(np);
    for (double& v : x) v = gauss(rng);
    double fx = eval(x);
    if (!std::isfinite(fx)) continue;
    double step = 0.1;
    for (int it = 0; it < opts.max_iters; ++it) {
      double h = (it * 2 < opts.max_iters) ? opts.fd_step : opts.fd_step * 1e-2;
      for (std::size_t i = 0; i < np; ++i) {
        double save = x[i];
        x[i] = save + h;
        double fp = eval(x);
        x[i] = save - h;
        double fm = eval(x);
        x[i] = save;
        grad[i] = (std::isfinite(fp) && std::isfinite(fm)) ? (fp - fm) / (2.0 * h) : 0.0;
      }
      double gn = 0.0;
      for (double gi : grad) gn += gi * gi;
      gn = std::sqrt(gn);
      if (gn < 1e-12) break;
      bool improved = false;
      double t = step;
      for (int bt = 0; bt < 30; ++bt) {
        for (std::size_t i = 0; i < np; ++i) trial[i] = x[i] + t / gn * grad[i];
        double ft = eval(trial);
        if (std::isfinite(ft) && ft > fx) {
          x = trial;
          fx = ft;
          step = std::min(t * 1.5, 10.0);
          improved = true;
          break;
        }
        t *= 0.5;
      }
      if (!improved || step < 1e-13) break;
    }
    if (fx > best.value) {
      best.value = fx;
      best.achiever = povm_from_params(dim, outcomes, x);
    }
  }
  return best;
}

PovmAscentResult max_noisy_arimoto_mi(const Ensemble& e, const KrausChannel& n,
                                      const Order& alpha, const PovmAscentOptions& opts) {
  std::size_t o = opts.outcomes ? opts.outcomes
                                : static_cast<std::size_t>(n.dim_out()) * n.dim_out();
  auto objective = [&](const Povm& m) { return noisy_arimoto_mi(e, m, n, alpha); };
  return maximize_over_povms(n.dim_out(), o, objective, opts);
}

double qsb_value(const QsbGame& game, const Povm& m, const Order& alpha) {
  if (game.odds.sign() != sgn(alpha.value()))
    throw InvalidDistribution("qsb_value: odds sign must match sgn(alpha)");
  JointPmf j = born_joint(game.ensemble, m);
  RiskParam r(alpha.risk());
  CondPmf b = optimal_strategy(game.odds, j, r);
  return ice(b, game.odds, j, r).value;
}

double best_free_qsb_value(const QsbGame& game, const FreeSet& free_set, const Order& alpha) {
  switch (free_set.kind()) {
    case FreeSetKind::UNINFORMATIVE_MEASUREMENTS:
    case FreeSetKind::CONSTANT_CHANNELS: {
      // both built-ins reduce to the game without side information
      RiskParam r(alpha.risk());
      Pmf b = optimal_strategy(game.odds, game.ensemble.priors, r);
      return ice(b, game.odds, game.ensemble.priors, r).value;
    }
    case FreeSetKind::EXPLICIT_MEASUREMENTS: {
      double best = -kInf;
      for (const Povm& n : free_set.measurements())
        best = std::max(best, qsb_value(game, n, alpha));
      return best;
    }
    default:
      throw EmptyFreeSet("best_free_qsb_value: free set must contain measurements");
  }
}

double nqsb_value(const QsbGame& game, const Povm& m, const KrausChannel& n,
                  const Order& alpha) {
  return qsb_value(game, adjoint_apply(n, m), alpha);
}

double qcb_value(const Odds& odds, const Pmf& prior, const std::vector<KrausChannel>& channels,
                 const DensityMatrix& rho, const Povm& m, const Order& alpha) {
  if (channels.size() != prior.size())
    throw ShapeMismatch("qcb_value: channel list and prior sizes differ");
  StateSet induced;
  induced.reserve(channels.size());
  for (const auto& lam : channels) induced.push_back(apply_channel(lam, rho));
  QsbGame game(odds, Ensemble(std::move(induced), prior));
  return qsb_value(game, m, alpha);
}

DiscriminationExclusion discrimination_exclusion(const JointPmf& j) {
  DiscriminationExclusion de;
  for (std::size_t g = 0; g < j.num_g(); ++g) {
    double mx = 0.0, mn = kInf;
    for (std::size_t x = 0; x < j.num_x(); ++x) {
      mx = std::max(mx, j(x, g));
      mn = std::min(mn, j(x, g));
    }
    de.p_succ_qsd += mx;
    de.p_err_qse += mn;
  }
  return de;
}

DiscriminationExclusion discrimination_exclusion(const Ensemble& e, const Povm& m) {
  return discrimination_exclusion(born_joint(e, m));
}

double arimoto_gap_measurement(const Ensemble& e, const Povm& m, const FreeSet& free_set,
                               const Order& alpha) {
  double fixed = arimoto_mi_quantum(e, m, alpha);
  switch (free_set.kind()) {
    case FreeSetKind::UNINFORMATIVE_MEASUREMENTS:
      return fixed;  // the free maximum is analytically zero
    case FreeSetKind::EXPLICIT_MEASUREMENTS: {
      double best = -kInf;
      for (const Povm& n : free_set.measurements())
        best = std::max(best, arimoto_mi_quantum(e, n, alpha));
      return fixed - best;
    }
    default:
      throw EmptyFreeSet("arimoto_gap_measurement: need a measurement free set");
  }
}

double arimoto_gap_channel(const Ensemble& e, const KrausChannel& n, const FreeSet& free_set,
                           const Order& alpha, const PovmAscentOptions& opts) {
  double fixed = max_noisy_arimoto_mi(e, n, alpha, opts).value;
  switch (free_set.kind()) {
    case FreeSetKind::CONSTANT_CHANNELS:
      return fixed;  // constant channels convey nothing for any POVM
    case FreeSetKind::EXPLICIT_CHANNELS: {
      double best = -kInf;
      PovmAscentOptions inner = opts;
      for (std::size_t i = 0; i < free_set.channels().size(); ++i) {
        inner.seed = opts.seed + 101 * (i + 1);
        best = std::max(best, max_noisy_arimoto_mi(e, free_set.channels()[i], alpha, inner).value);
      }
      return fixed - best;
    }
    default:
      throw EmptyFreeSet("arimoto_gap_channel: need a channel free set");
  }
}

namespace {

JointPmf qcb_joint(const std::vector<KrausChannel>& channels, const Pmf& prior,
                   const DensityMatrix& rho, const Povm& m) {
  StateSet induced;
  induced.reserve(channels.size());
  for (const auto& lam : channels) induced.push_back(apply_channel(lam, rho));
  return JointPmf::from_conditional(born_cond_pmf(m, induced), prior);
}

}  // namespace

double arimoto_gap_state(const std::vector<KrausChannel>& channels, const Pmf& prior,
                         const DensityMatrix& rho, const Povm& m, const FreeSet& free_states,
                         const Order& alpha) {
  if (free_states.kind() != FreeSetKind::EXPLICIT_STATES)
    throw EmptyFreeSet("arimoto_gap_state: need an explicit state free set");
  double fixed = arimoto_mi(qcb_joint(channels, prior, rho, m), alpha);
  double best = -kInf;
  for (const DensityMatrix& sigma : free_states.states())
    best = std::max(best, arimoto_mi(qcb_joint(channels, prior, sigma, m), alpha));
  return fixed - best;
}

double arimoto_gap_state_measurement(const std::vector<KrausChannel>& channels, const Pmf& prior,
                                     const DensityMatrix& rho, const Povm& m,
                                     const FreeSet& free_states, const FreeSet& free_povms,
                                     const Order& alpha) {
  if (free_states.kind() != FreeSetKind::EXPLICIT_STATES ||
      free_povms.kind() != FreeSetKind::EXPLICIT_MEASUREMENTS)
    throw EmptyFreeSet("arimoto_gap_state_measurement: need explicit state and POVM free sets");
  double fixed = arimoto_mi(qcb_joint(channels, prior, rho, m), alpha);
  double best = -kInf;
  for (const DensityMatrix& sigma : free_states.states())
    for (const Povm& n : free_povms.measurements())
      best = std::max(best, arimoto_mi(qcb_joint(channels, prior, sigma, n), alpha));
  return fixed - best;
}

namespace {

ResultReport make_report(std::string name, const Order& alpha, double lhs, double rhs,
                         double tol, std::uint64_t seed) {
  ResultReport r;
  r.result = std::move(name);
  r.alpha = alpha.value();
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_err = std::abs(lhs - rhs);
  r.pass = std::isfinite(r.abs_err) && r.abs_err <= tol;
  r.seed = seed;
  return r;
}

Odds game_odds(const Order& alpha, std::size_t n, double c) {
  return Odds::constant(n, sgn(alpha.value()) * c);
}

// sgn(alpha) log2 of the ICE ratio; both values share the odds sign.
double ratio_log(const Order& alpha, double num, double den) {
  return sgn(alpha.value()) * std::log2(num / den);
}

// Numeric (closed-form-free) best ICE of the side-information game.
double numeric_game_value(const Odds& o, const JointPmf& j, const RiskParam& r,
                          const NumericIceOptions& opts) {
  return numeric_optimal_ice(o, j, r, opts).ice.value;
}

}  // namespace

ResultReport check_result1(const Ensemble& e, const Povm& m, const Order& alpha, double tol,
                           const ResultCheckOptions& opts) {
  double lhs = arimoto_mi_quantum(e, m, alpha);
  Odds o = game_odds(alpha, e.size(), opts.constant_odds);
  RiskParam r(alpha.risk());
  double num = numeric_game_value(o, born_joint(e, m), r, opts.ice);
  double den = numeric_optimal_ice(o, e.priors, r, opts.ice).ice.value;
  return make_report("R1", alpha, lhs, ratio_log(alpha, num, den), tol, opts.seed);
}

ResultReport check_result2(const Ensemble& e, const KrausChannel& n, const Order& alpha,
                           double tol, const ResultCheckOptions& opts) {
  PovmAscentOptions pa = opts.povm;
  pa.seed = opts.seed * 2 + 1;
  double lhs = max_noisy_arimoto_mi(e, n, alpha, pa).value;

  // RHS numerator: ascend over POVMs on the game-value route, then re-solve
  // the betting stage numerically at the achiever.
  Odds o = game_odds(alpha, e.size(), opts.constant_odds);
  RiskParam r(alpha.risk());
  PovmAscentOptions pb = opts.povm;
  pb.seed = opts.seed * 2 + 2;
  auto game_route = [&](const Povm& mm) {
    JointPmf j = noisy_born_joint(e, mm, n);
    CondPmf b = optimal_strategy(o, j, r);
    return ice(b, o, j, r).value;
  };
  std::size_t outs = pb.outcomes ? pb.outcomes
                                 : static_cast<std::size_t>(n.dim_out()) * n.dim_out();
  PovmAscentResult ascent = maximize_over_povms(n.dim_out(), outs, game_route, pb);
  double num = numeric_game_value(o, noisy_born_joint(e, *ascent.achiever, n), r, opts.ice);
  // best constant channel = no side information (analytic reduction)
  double den = numeric_optimal_ice(o, e.priors, r, opts.ice).ice.value;
  return make_report("R2", alpha, lhs, ratio_log(alpha, num, den), tol, opts.seed);
}

ResultReport check_result3_measurement(const Ensemble& e, const Povm& m,
                                       const std::vector<Povm>& free_povms, const Order& alpha,
                                       double tol, const ResultCheckOptions& opts) {
  FreeSet fs = FreeSet::explicit_measurements(free_povms);
  double lhs = arimoto_gap_measurement(e, m, fs, alpha);
  Odds o = game_odds(alpha, e.size(), opts.constant_odds);
  RiskParam r(alpha.risk());
  double num = numeric_game_value(o, born_joint(e, m), r, opts.ice);
  double den = -kInf;
  for (const Povm& nn : free_povms)
    den = std::max(den, numeric_game_value(o, born_joint(e, nn), r, opts.ice));
  return make_report("R3", alpha, lhs, ratio_log(alpha, num, den), tol, opts.seed);
}

ResultReport check_result3_channel(const Ensemble& e, const KrausChannel& n,
                                   const std::vector<KrausChannel>& free_channels,
                                   const Order& alpha, double tol,
                                   const ResultCheckOptions& opts) {
  FreeSet fs = FreeSet::explicit_channels(free_channels);
  PovmAscentOptions pa = opts.povm;
  pa.seed = opts.seed * 3 + 1;
  double lhs = arimoto_gap_channel(e, n, fs, alpha, pa);

  Odds o = game_odds(alpha, e.size(), opts.constant_odds);
  RiskParam r(alpha.risk());
  auto best_value_for_channel = [&](const KrausChannel& ch, std::uint64_t salt) {
    PovmAscentOptions pb = opts.povm;
    pb.seed = opts.seed * 3 + salt;
    auto game_route = [&](const Povm& mm) {
      JointPmf j = noisy_born_joint(e, mm, ch);
      CondPmf b = optimal_strategy(o, j, r);
      return ice(b, o, j, r).value;
    };
    std::size_t outs = pb.outcomes ? pb.outcomes
                                   : static_cast<std::size_t>(ch.dim_out()) * ch.dim_out();
    PovmAscentResult ascent = maximize_over_povms(ch.dim_out(), outs, game_route, pb);
    return numeric_game_value(o, noisy_born_joint(e, *ascent.achiever, ch), r, opts.ice);
  };
  double num = best_value_for_channel(n, 2);
  double den = -kInf;
  for (std::size_t i = 0; i < free_channels.size(); ++i)
    den = std::max(den, best_value_for_channel(free_channels[i], 10 + i));
  return make_report("R3c", alpha, lhs, ratio_log(alpha, num, den), tol, opts.seed);
}

ResultReport check_result4_state(const std::vector<KrausChannel>& channels, const Pmf& prior,
                                 const DensityMatrix& rho, const Povm& m,
                                 const std::vector<DensityMatrix>& free_states,
                                 const Order& alpha, double tol,
                                 const ResultCheckOptions& opts) {
  FreeSet fs = FreeSet::explicit_states(free_states);
  double lhs = arimoto_gap_state(channels, prior, rho, m, fs, alpha);
  Odds o = game_odds(alpha, prior.size(), opts.constant_odds);
  RiskParam r(alpha.risk());
  double num = numeric_game_value(o, qcb_joint(channels, prior, rho, m), r, opts.ice);
  double den = -kInf;
  for (const DensityMatrix& sigma : free_states)
    den = std::max(den, numeric_game_value(o, qcb_joint(channels, prior, sigma, m), r, opts.ice));
  return make_report("R4", alpha, lhs, ratio_log(alpha, num, den), tol, opts.seed);
}

ResultReport check_result4_pair(const std::vector<KrausChannel>& channels, const Pmf& prior,
                                const DensityMatrix& rho, const Povm& m,
                                const std::vector<DensityMatrix>& free_states,
                                const std::vector<Povm>& free_povms, const Order& alpha,
                                double tol, const ResultCheckOptions& opts) {
  FreeSet fstates = FreeSet::explicit_states(free_states);
  FreeSet fpovms = FreeSet::explicit_measurements(free_povms);
  double lhs = arimoto_gap_state_measurement(channels, prior, rho, m, fstates, fpovms, alpha);
  Odds o = game_odds(alpha, prior.size(), opts.constant_odds);
  RiskParam r(alpha.risk());
  double num = numeric_game_value(o, qcb_joint(channels, prior, rho, m), r, opts.ice);
  double den = -kInf;
  for (const DensityMatrix& sigma : free_states)
    for (const Povm& nn : free_povms)
      den = std::max(den, numeric_game_value(o, qcb_joint(channels, prior, sigma, nn), r, opts.ice));
  return make_report("R4p", alpha, lhs, ratio_log(alpha, num, den), tol, opts.seed);
}

ResultReport check_result5(const JointPmf& j, const Order& alpha, double tol,
                           const ResultCheckOptions& opts) {
  double lhs = arimoto_mi(j, alpha);
  Odds o = game_odds(alpha, j.num_x(), opts.constant_odds);
  RiskParam r(alpha.risk());
  double num = numeric_game_value(o, j, r, opts.ice);
  double den = numeric_optimal_ice(o, j.marginal_x(), r, opts.ice).ice.value;
  return make_report("R5", alpha, lhs, ratio_log(alpha, num, den), tol, opts.seed);
}

}  // namespace qbet
