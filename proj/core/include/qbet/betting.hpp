#ifndef QBET_BETTING_HPP
#define QBET_BETTING_HPP

#include <cstdint>

#include "qbet/divergence.hpp"
#include "qbet/order.hpp"
#include "qbet/pmf.hpp"

namespace qbet {

// Signed odds: every entry shares one sign and is bounded away from zero.
// Positive odds define a gain game, negative odds a loss game.
class Odds {
 public:
  explicit Odds(std::vector<double> values);
  static Odds constant(std::size_t n, double c);

  std::size_t size() const { return o_.size(); }
  double operator[](std::size_t x) const { return o_[x]; }
  int sign() const { return sign_; }
  double abs(std::size_t x) const { return std::abs(o_[x]); }

 private:
  std::vector<double> o_;
  int sign_;
};

// Risk parameter R = 1/alpha on the extended line; R = +0.0 / -0.0 keep the
// alpha = +inf / -inf branches.
struct RiskParam {
  double r = 0.0;
  RiskParam() = default;
  RiskParam(double value) : r(value) {}  // NOLINT: implicit by design
  static RiskParam from_order(const Order& a) { return RiskParam(a.risk()); }
  Order order() const { return Order::from_risk(r); }
};

// u_R(w) = sgn(w)(|w|^(1-R) - 1)/(1-R), natural log at R = 1.
double isoelastic_utility(double w, const RiskParam& R);
// Closed-form first and second derivatives, used by tests as oracles.
double isoelastic_utility_d1(double w, const RiskParam& R);
double isoelastic_utility_d2(double w, const RiskParam& R);

// Relative risk aversion -w u''/u' from supplied derivative values.
double rra(double u_second, double u_first, double w);

// Certainty-equivalent value; `boundary` marks the degenerate limit where a
// zero payoff on the support meets a negative power 1 - R < 0 and the ICE
// collapses to exactly zero.
struct IceValue {
  double value = 0.0;
  bool boundary = false;
};

// Isoelastic certainty equivalent without side information.
IceValue ice(const Pmf& strategy, const Odds& odds, const Pmf& p, const RiskParam& R);
// With side information: strategy rows indexed by g, each a PMF over x.
IceValue ice(const CondPmf& strategy, const Odds& odds, const JointPmf& j, const RiskParam& R);

// sgn(o) log2 |ICE|.
double log_ice(const Pmf& strategy, const Odds& odds, const Pmf& p, const RiskParam& R);
double log_ice(const CondPmf& strategy, const Odds& odds, const JointPmf& j, const RiskParam& R);

// Closed-form optimal betting PMFs b*(x) and b*(x|g) (the h^(R,o,p) family).
Pmf optimal_strategy(const Odds& odds, const Pmf& p, const RiskParam& R);
CondPmf optimal_strategy(const Odds& odds, const JointPmf& j, const RiskParam& R);

struct BlpDecomposition {
  double term_const = 0.0;     // sgn(o) log2 |c^o|
  double term_div_prior = 0.0; // +/- D_(1/R)(p || r^o), conditional flavour with side info
  double term_div_strategy = 0.0;  // -/+ D_R(h || b)
  double sum() const { return term_const + term_div_prior + term_div_strategy; }
};

BlpDecomposition blp_decomposition(const Pmf& strategy, const Odds& odds, const Pmf& p,
                                   const RiskParam& R);
BlpDecomposition blp_decomposition(const CondPmf& strategy, const Odds& odds, const JointPmf& j,
                                   const RiskParam& R);

struct NumericIceOptions {
  std::uint64_t seed = 0;
  int num_starts = 8;
  int max_iters = 10000;
};

struct NumericIceResult {
  IceValue ice;
  double log_ice = 0.0;
  Pmf strategy;       // no-side-information variant
};
struct NumericIceResultSi {
  IceValue ice;
  double log_ice = 0.0;
  CondPmf strategy;   // rows indexed by g
};

// Independent simplex-based maximisation of the ICE; never consults the
// closed-form strategies. The per-outcome structure of the objective allows
// one simplex problem per side-information symbol.
NumericIceResult numeric_optimal_ice(const Odds& odds, const Pmf& p, const RiskParam& R,
                                     const NumericIceOptions& opts = {});
NumericIceResultSi numeric_optimal_ice(const Odds& odds, const JointPmf& j, const RiskParam& R,
                                       const NumericIceOptions& opts = {});

}  // namespace qbet

#endif  // QBET_BETTING_HPP
