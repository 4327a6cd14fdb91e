#include "qbet/betting.hpp"

#include <algorithm>
#include <cmath>

#include "qbet/errors.hpp"

namespace qbet {

namespace {
constexpr double kEps = 0.0;
}

Odds::Odds(std::vector<double> values) : o_(std::move(values)) {
  if (o_.empty()) throw InvalidDistribution("Odds: empty");
  sign_ = sgn(o_.front());
  for (double v : o_) {
    if (!(std::abs(v) > 0.0) || !std::isfinite(v))
      throw InvalidDistribution("Odds: entries must be nonzero finite");
    if (sgn(v) != sign_) throw InvalidDistribution("Odds: entries must share one sign");
  }
}

Odds Odds::constant(std::size_t n, double c) {
  if (c == 0.0) throw InvalidDistribution("Odds::constant: C must be nonzero");
  return Odds(std::vector<double>(n, c));
}

double isoelastic_utility(double w, const RiskParam& R) {
  if (w == 0.0 && R.r >= 1.0)
    throw UndefinedAtZero("isoelastic_utility: w = 0 undefined for R >= 1");
  double aw = std::abs(w);
  if (R.r == 1.0) return sgn(w) * std::log(aw);
  return sgn(w) * (std::pow(aw, 1.0 - R.r) - 1.0) / (1.0 - R.r);
}

double isoelastic_utility_d1(double w, const RiskParam& R) {
  double aw = std::abs(w);
  if (aw == 0.0) throw UndefinedAtZero("isoelastic_utility_d1: w = 0");
  // d/dw [sgn(w)(|w|^(1-R)-1)/(1-R)] = |w|^(-R), both signs of w
  return std::pow(aw, -R.r);
}

double isoelastic_utility_d2(double w, const RiskParam& R) {
  double aw = std::abs(w);
  if (aw == 0.0) throw UndefinedAtZero("isoelastic_utility_d2: w = 0");
  return -R.r * sgn(w) * std::pow(aw, -R.r - 1.0);
}

double rra(double u_second, double u_first, double w) {
  if (!(u_first > 0.0)) throw InvalidDistribution("rra: u' must be positive");
  return -w * u_second / u_first;
}

namespace {

struct PayoffTerm {
  double prob;
  double abs_payoff;
};

// Collects (p, |b o|) over the support of the distribution.
template <typename PayoffFn>
std::vector<PayoffTerm> collect_terms(std::size_t n, PayoffFn&& payoff) {
  std::vector<PayoffTerm> terms;
  terms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    PayoffTerm t = payoff(i);
    if (t.prob > kEps) terms.push_back(t);
  }
  return terms;
}

IceValue ice_of_terms(const std::vector<PayoffTerm>& terms, int odds_sign, const RiskParam& R) {
  const double r = R.r;
  IceValue out;
  if (r == 0.0) {
    double s = 0.0;
    for (const auto& t : terms) s += t.prob * t.abs_payoff;
    out.value = odds_sign * s;
    return out;
  }
  if (r == 1.0) {
    double l = 0.0;
    bool zero = false;
    for (const auto& t : terms) {
      if (t.abs_payoff == 0.0) {
        zero = true;
        break;
      }
      l += t.prob * std::log2(t.abs_payoff);
    }
    out.value = zero ? 0.0 : odds_sign * std::exp2(l);
    out.boundary = zero;
    return out;
  }
  if (r == kInf || r == -kInf) {
    double m = (r == kInf) ? kInf : 0.0;
    for (const auto& t : terms)
      m = (r == kInf) ? std::min(m, t.abs_payoff) : std::max(m, t.abs_payoff);
    out.value = odds_sign * m;
    return out;
  }
  const double t = 1.0 - r;
  if (t < 0.0) {
    for (const auto& term : terms) {
      if (term.abs_payoff == 0.0) {  // diverging utility term, ICE -> 0
        out.value = odds_sign * 0.0;
        out.boundary = true;
        return out;
      }
    }
  }
  std::vector<double> exps;
  exps.reserve(terms.size());
  for (const auto& term : terms) {
    if (term.abs_payoff == 0.0) continue;  // t > 0 here
    exps.push_back(std::log2(term.prob) + t * std::log2(term.abs_payoff));
  }
  double ls = log2_sum_exp2(exps);
  out.value = odds_sign * std::exp2(ls / t);
  return out;
}

}  // namespace

IceValue ice(const Pmf& strategy, const Odds& odds, const Pmf& p, const RiskParam& R) {
  if (strategy.size() != p.size() || odds.size() != p.size())
    throw ShapeMismatch("ice: strategy/odds/prior sizes differ");
  auto terms = collect_terms(p.size(), [&](std::size_t x) {
    return PayoffTerm{p[x], strategy[x] * odds.abs(x)};
  });
  return ice_of_terms(terms, odds.sign(), R);
}

IceValue ice(const CondPmf& strategy, const Odds& odds, const JointPmf& j, const RiskParam& R) {
  if (strategy.num_inputs() != j.num_g() || strategy.num_outputs() != j.num_x() ||
      odds.size() != j.num_x())
    throw ShapeMismatch("ice: strategy rows must be indexed by g over x");
  std::vector<PayoffTerm> terms;
  terms.reserve(j.num_x() * j.num_g());
  for (std::size_t g = 0; g < j.num_g(); ++g)
    for (std::size_t x = 0; x < j.num_x(); ++x)
      if (j(x, g) > kEps) terms.push_back({j(x, g), strategy(g, x) * odds.abs(x)});
  return ice_of_terms(terms, odds.sign(), R);
}

double log_ice(const Pmf& strategy, const Odds& odds, const Pmf& p, const RiskParam& R) {
  return odds.sign() * std::log2(std::abs(ice(strategy, odds, p, R).value));
}

double log_ice(const CondPmf& strategy, const Odds& odds, const JointPmf& j, const RiskParam& R) {
  return odds.sign() * std::log2(std::abs(ice(strategy, odds, j, R).value));
}

namespace {

// h^(R,o,p)(x) over one conditional slice. The odds sign factors out of the
// normalisation, so |o| is used throughout.
std::vector<double> optimal_weights(const Odds& odds, const std::vector<double>& p,
                                    const RiskParam& R) {
  const std::size_t n = p.size();
  const double r = R.r;
  std::vector<double> w(n, 0.0);

  if (r == 1.0) {  // Kelly: proportional betting
    for (std::size_t x = 0; x < n; ++x) w[x] = p[x];
    return w;
  }
  if (r == 0.0) {
    // linear objective: all mass on the best signed payoff slope
    std::size_t best = 0;
    double bestv = -kInf;
    for (std::size_t x = 0; x < n; ++x) {
      double v = odds[x] * p[x];  // signed
      if (v > bestv) {
        bestv = v;
        best = x;
      }
    }
    w[best] = 1.0;
    return w;
  }
  if (r == kInf || r == -kInf) {
    // risk extremes: the Dutch-book equaliser on the support
    for (std::size_t x = 0; x < n; ++x)
      if (p[x] > kEps) w[x] = 1.0 / odds.abs(x);
    return w;
  }

  const double inv_r = 1.0 / r;
  const double oexp = (1.0 - r) / r;
  if (inv_r < 0.0) {
    // negative orders favour the excluded outcomes; zero-probability symbols
    // get all the mass (the p^(1/R) weight diverges there)
    bool any_zero = false;
    for (std::size_t x = 0; x < n; ++x)
      if (p[x] <= kEps) {
        w[x] = 1.0;
        any_zero = true;
      }
    if (any_zero) return w;
  }
  std::vector<double> logw(n, -kInf);
  for (std::size_t x = 0; x < n; ++x) {
    if (p[x] <= kEps) continue;  // inv_r > 0 here
    logw[x] = inv_r * std::log2(p[x]) + oexp * std::log2(odds.abs(x));
  }
  double norm = log2_sum_exp2(logw);
  if (!std::isfinite(norm))
    throw DegenerateDistribution("optimal_strategy: no admissible support");
  for (std::size_t x = 0; x < n; ++x)
    w[x] = (logw[x] == -kInf) ? 0.0 : std::exp2(logw[x] - norm);
  return w;
}

}  // namespace

Pmf optimal_strategy(const Odds& odds, const Pmf& p, const RiskParam& R) {
  if (odds.size() != p.size()) throw ShapeMismatch("optimal_strategy: sizes differ");
  return Pmf::normalized(optimal_weights(odds, p.probs(), R));
}

CondPmf optimal_strategy(const Odds& odds, const JointPmf& j, const RiskParam& R) {
  if (odds.size() != j.num_x()) throw ShapeMismatch("optimal_strategy: sizes differ");
  Pmf pg = j.marginal_g();
  std::vector<std::vector<double>> rows;
  rows.reserve(j.num_g());
  for (std::size_t g = 0; g < j.num_g(); ++g) {
    if (pg[g] <= kEps) {
      rows.push_back(std::vector<double>(j.num_x(), 1.0 / static_cast<double>(j.num_x())));
      continue;
    }
    Pmf pxg = j.condition_on_g(g);
    rows.push_back(Pmf::normalized(optimal_weights(odds, pxg.probs(), R)).probs());
  }
  return CondPmf(std::move(rows));
}

namespace {

double abs_c_o(const Odds& odds) {
  double s = 0.0;
  for (std::size_t x = 0; x < odds.size(); ++x) s += 1.0 / odds[x];
  return 1.0 / std::abs(s);
}

Pmf r_o_pmf(const Odds& odds) {
  std::vector<double> r(odds.size());
  for (std::size_t x = 0; x < odds.size(); ++x) r[x] = 1.0 / odds.abs(x);
  return Pmf::normalized(std::move(r));
}

int sgn_risk(const RiskParam& R) { return sgn(R.r); }

}  // namespace

BlpDecomposition blp_decomposition(const Pmf& strategy, const Odds& odds, const Pmf& p,
                                   const RiskParam& R) {
  if (strategy.size() != p.size() || odds.size() != p.size())
    throw ShapeMismatch("blp_decomposition: sizes differ");
  const int so = odds.sign();
  const int sr = sgn_risk(R);
  BlpDecomposition d;
  d.term_const = so * std::log2(abs_c_o(odds));
  d.term_div_prior = so * sr * renyi_div(p, r_o_pmf(odds), Order::from_risk(R.r));
  Pmf h = optimal_strategy(odds, p, R);
  d.term_div_strategy = -so * sr * renyi_div(h, strategy, Order(R.r));
  return d;
}

BlpDecomposition blp_decomposition(const CondPmf& strategy, const Odds& odds, const JointPmf& j,
                                   const RiskParam& R) {
  if (strategy.num_inputs() != j.num_g() || strategy.num_outputs() != j.num_x() ||
      odds.size() != j.num_x())
    throw ShapeMismatch("blp_decomposition: shapes differ");
  const int so = odds.sign();
  const int sr = sgn_risk(R);
  const std::size_t ng = j.num_g();
  const std::size_t nx = j.num_x();
  Pmf pg = j.marginal_g();

  BlpDecomposition d;
  d.term_const = so * std::log2(abs_c_o(odds));

  // D^BLP_(1/R)(p_{X|G} || r^o | p_G): conditioning variable is G here.
  std::vector<std::vector<double>> p_xg_rows(ng, std::vector<double>(nx, 0.0));
  for (std::size_t g = 0; g < ng; ++g) {
    if (pg[g] <= kEps) {
      std::fill(p_xg_rows[g].begin(), p_xg_rows[g].end(), 1.0 / static_cast<double>(nx));
      continue;
    }
    Pmf pxg = j.condition_on_g(g);
    p_xg_rows[g] = pxg.probs();
  }
  CondPmf p_x_given_g(p_xg_rows);
  d.term_div_prior =
      so * sr *
      cond_renyi_div(CrdVariant::BLP, p_x_given_g, broadcast_row(r_o_pmf(odds), ng), pg,
                     Order::from_risk(R.r));

  // D_R(h_{X|G} h_G || b_{X|G} h_G) over the joint alphabet.
  CondPmf h_xg = optimal_strategy(odds, j, R);
  // h_G weights: p(g) [sum_x p(x|g)^(1/R) |o(x)|^((1-R)/R)]^R, log-space.
  std::vector<double> log_hg(ng, -kInf);
  for (std::size_t g = 0; g < ng; ++g) {
    if (pg[g] <= kEps) continue;
    Pmf pxg = j.condition_on_g(g);
    std::vector<double> exps;
    for (std::size_t x = 0; x < nx; ++x) {
      if (pxg[x] <= kEps && 1.0 / R.r > 0.0) continue;
      double lp = (pxg[x] > kEps) ? std::log2(pxg[x]) : -kInf;
      if (lp == -kInf) {
        exps.push_back(kInf);  // p^(1/R) with 1/R < 0 diverges
        continue;
      }
      exps.push_back(lp / R.r + (1.0 - R.r) / R.r * std::log2(odds.abs(x)));
    }
    log_hg[g] = std::log2(pg[g]) + R.r * log2_sum_exp2(exps);
  }
  double norm = log2_sum_exp2(log_hg);
  std::vector<double> joint_h(ng * nx, 0.0), joint_b(ng * nx, 0.0);
  for (std::size_t g = 0; g < ng; ++g) {
    double hg = std::isfinite(log_hg[g]) ? std::exp2(log_hg[g] - norm) : 0.0;
    for (std::size_t x = 0; x < nx; ++x) {
      joint_h[g * nx + x] = hg * h_xg(g, x);
      joint_b[g * nx + x] = hg * strategy(g, x);
    }
  }
  d.term_div_strategy =
      -so * sr *
      renyi_div(Pmf::normalized(std::move(joint_h)), Pmf::normalized(std::move(joint_b)),
                Order(R.r));
  return d;
}

namespace {

// Maximise the ICE over one betting simplex. For finite R != 0,1 this is the
// inner sum sum_x p(x) (b(x)|o(x)|)^t, to be maximised when s/t > 0 and
// minimised otherwise. Analytic gradients keep the optimum tight.
std::vector<double> optimize_slice(const Odds& odds, const std::vector<double>& p,
                                   const RiskParam& R, const NumericIceOptions& opts,
                                   std::uint64_t salt) {
  const std::size_t n = p.size();
  const double r = R.r;

  if (r == 0.0) {
    std::size_t best = 0;
    double bestv = -kInf;
    for (std::size_t x = 0; x < n; ++x) {
      double v = odds[x] * p[x];
      if (v > bestv) {
        bestv = v;
        best = x;
      }
    }
    std::vector<double> b(n, 0.0);
    b[best] = 1.0;
    return b;
  }
  if (r == kInf || r == -kInf) {
    std::vector<double> b(n, 0.0);
    if ((odds.sign() > 0) == (r == kInf)) {
      // maximin gain / minimax loss: equalise on the support
      for (std::size_t x = 0; x < n; ++x)
        if (p[x] > kEps) b[x] = 1.0 / odds.abs(x);
    } else if (odds.sign() > 0) {
      // best-case seeker: everything on the largest live odds
      std::size_t best = 0;
      double bestv = -kInf;
      for (std::size_t x = 0; x < n; ++x)
        if (p[x] > kEps && odds.abs(x) > bestv) {
          bestv = odds.abs(x);
          best = x;
        }
      b[best] = 1.0;
    } else {
      // loss game with min |payoff| figure: a zero on the support kills it
      std::size_t best = 0;
      for (std::size_t x = 0; x < n; ++x)
        if (p[x] <= kEps) best = x;
      b[best] = 1.0;
    }
    double s = std::accumulate(b.begin(), b.end(), 0.0);
    if (!(s > 0.0)) b.assign(n, 1.0 / static_cast<double>(n));
    return b;
  }

  SimplexOptOptions sopts;
  sopts.seed = opts.seed ^ (0x9e3779b97f4a7c15ULL * (salt + 1));
  sopts.num_starts = opts.num_starts;
  sopts.max_iters = opts.max_iters;

  if (r == 1.0) {
    const double sign = odds.sign();
    auto f = [&](const std::vector<double>& b) {
      double v = 0.0;
      for (std::size_t x = 0; x < n; ++x) {
        if (p[x] <= kEps) continue;
        if (b[x] <= 0.0) return (sign > 0) ? -kInf : kInf;
        v += p[x] * std::log2(b[x] * odds.abs(x));
      }
      return sign * v;
    };
    auto g = [&](const std::vector<double>& b, std::vector<double>& grad) {
      for (std::size_t x = 0; x < n; ++x)
        grad[x] = (p[x] > kEps && b[x] > 0.0) ? sign * p[x] / (b[x] * M_LN2) : 0.0;
    };
    return maximize_on_simplex(n, f, sopts, g).x;
  }

  const double t = 1.0 - r;
  const double scale = odds.sign() / t;  // maximise scale * inner sum
  auto f = [&](const std::vector<double>& b) {
    double v = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      if (p[x] <= kEps) continue;
      double w = b[x] * odds.abs(x);
      if (w <= 0.0) {
        if (t < 0.0) return -kInf;  // diverging utility term
        continue;
      }
      v += p[x] * std::pow(w, t);
    }
    return scale * v;
  };
  auto g = [&](const std::vector<double>& b, std::vector<double>& grad) {
    for (std::size_t x = 0; x < n; ++x) {
      grad[x] = 0.0;
      if (p[x] <= kEps) continue;
      double w = b[x] * odds.abs(x);
      if (w <= 0.0) continue;
      grad[x] = scale * p[x] * t * std::pow(w, t - 1.0) * odds.abs(x);
    }
  };
  return maximize_on_simplex(n, f, sopts, g).x;
}

}  // namespace

NumericIceResult numeric_optimal_ice(const Odds& odds, const Pmf& p, const RiskParam& R,
                                     const NumericIceOptions& opts) {
  if (odds.size() != p.size()) throw ShapeMismatch("numeric_optimal_ice: sizes differ");
  Pmf b = Pmf::normalized(optimize_slice(odds, p.probs(), R, opts, 0));
  NumericIceResult out{ice(b, odds, p, R), 0.0, b};
  out.log_ice = odds.sign() * std::log2(std::abs(out.ice.value));
  return out;
}

NumericIceResultSi numeric_optimal_ice(const Odds& odds, const JointPmf& j, const RiskParam& R,
                                       const NumericIceOptions& opts) {
  if (odds.size() != j.num_x()) throw ShapeMismatch("numeric_optimal_ice: sizes differ");
  Pmf pg = j.marginal_g();
  std::vector<std::vector<double>> rows;
  rows.reserve(j.num_g());
  for (std::size_t g = 0; g < j.num_g(); ++g) {
    if (pg[g] <= kEps) {
      rows.push_back(std::vector<double>(j.num_x(), 1.0 / static_cast<double>(j.num_x())));
      continue;
    }
    // slice probabilities p(x,g); the per-g subproblems are independent
    std::vector<double> slice(j.num_x());
    for (std::size_t x = 0; x < j.num_x(); ++x) slice[x] = j(x, g);
    rows.push_back(optimize_slice(odds, slice, R, opts, g + 1));
  }
  CondPmf b(rows);
  NumericIceResultSi out{ice(b, odds, j, R), 0.0, b};
  out.log_ice = odds.sign() * std::log2(std::abs(out.ice.value));
  return out;
}

}  // namespace qbet
