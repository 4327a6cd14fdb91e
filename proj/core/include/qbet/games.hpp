#ifndef QBET_GAMES_HPP
#define QBET_GAMES_HPP

#include <functional>
#include <optional>
#include <string>

#include "qbet/betting.hpp"
#include "qbet/quantum.hpp"

namespace qbet {

struct QsbGame {
  Odds odds;
  Ensemble ensemble;
  QsbGame(Odds o, Ensemble e) : odds(std::move(o)), ensemble(std::move(e)) {
    if (odds.size() != ensemble.size())
      throw ShapeMismatch("QsbGame: odds length must match ensemble size");
  }
};

enum class FreeSetKind {
  UNINFORMATIVE_MEASUREMENTS,
  CONSTANT_CHANNELS,
  EXPLICIT_MEASUREMENTS,
  EXPLICIT_CHANNELS,
  EXPLICIT_STATES,
};

// A free-object family: the two analytic built-ins, or an explicit finite
// list of measurements / channels / states.
class FreeSet {
 public:
  static FreeSet uninformative_measurements();
  static FreeSet constant_channels();
  static FreeSet explicit_measurements(std::vector<Povm> ms);
  static FreeSet explicit_channels(std::vector<KrausChannel> ns);
  static FreeSet explicit_states(std::vector<DensityMatrix> states);

  FreeSetKind kind() const { return kind_; }
  const std::vector<Povm>& measurements() const { return povms_; }
  const std::vector<KrausChannel>& channels() const { return channels_; }
  const std::vector<DensityMatrix>& states() const { return states_; }

 private:
  explicit FreeSet(FreeSetKind k) : kind_(k) {}
  FreeSetKind kind_;
  std::vector<Povm> povms_;
  std::vector<KrausChannel> channels_;
  std::vector<DensityMatrix> states_;
};

// Arimoto MI of the joint p(g|x) p(x) induced by the Born rule.
double arimoto_mi_quantum(const Ensemble& e, const Povm& m, const Order& alpha);

// Noisy variant with p(g|x) = tr[M_g N(rho_x)].
double noisy_arimoto_mi(const Ensemble& e, const Povm& m, const KrausChannel& n,
                        const Order& alpha);

struct PovmAscentOptions {
  std::uint64_t seed = 0;
  int num_starts = 12;
  int max_iters = 200;
  std::size_t outcomes = 0;  // 0: use d*d
  double fd_step = 1e-5;
};

struct PovmAscentResult {
  double value = -kInf;
  std::optional<Povm> achiever;
};

// Generic maximisation over POVMs via the unconstrained parametrisation
// M_g = S^(-1/2) A_g A_g^dag S^(-1/2), S = sum_g A_g A_g^dag.
PovmAscentResult maximize_over_povms(int dim, std::size_t outcomes,
                                     const std::function<double(const Povm&)>& objective,
                                     const PovmAscentOptions& opts);

// I_alpha(X;G)_{E,N} = max_M I_alpha(X;G)_{E,M,N}; reports the achiever.
PovmAscentResult max_noisy_arimoto_mi(const Ensemble& e, const KrausChannel& n,
                                      const Order& alpha, const PovmAscentOptions& opts = {});

// max_b ICE of the QSB game under a fixed measurement, via the closed-form
// optimal strategy. Odds sign must match sgn(alpha).
double qsb_value(const QsbGame& game, const Povm& m, const Order& alpha);

// Best value over a free set of measurements. The uninformative built-in
// reduces to the horse-betting game without side information.
double best_free_qsb_value(const QsbGame& game, const FreeSet& free_set, const Order& alpha);

double nqsb_value(const QsbGame& game, const Povm& m, const KrausChannel& n, const Order& alpha);

double qcb_value(const Odds& odds, const Pmf& prior, const std::vector<KrausChannel>& channels,
                 const DensityMatrix& rho, const Povm& m, const Order& alpha);

struct DiscriminationExclusion {
  double p_succ_qsd = 0.0;
  double p_err_qse = 0.0;
};

// Success / error probabilities under the fixed measurement with the best
// classical post-processing (per-outcome argmax / argmin).
DiscriminationExclusion discrimination_exclusion(const Ensemble& e, const Povm& m);
DiscriminationExclusion discrimination_exclusion(const JointPmf& j);

enum class GapKind { MEASUREMENT, CHANNEL, STATE, STATE_MEASUREMENT };

double arimoto_gap_measurement(const Ensemble& e, const Povm& m, const FreeSet& free_set,
                               const Order& alpha);
double arimoto_gap_channel(const Ensemble& e, const KrausChannel& n, const FreeSet& free_set,
                           const Order& alpha, const PovmAscentOptions& opts = {});
double arimoto_gap_state(const std::vector<KrausChannel>& channels, const Pmf& prior,
                         const DensityMatrix& rho, const Povm& m, const FreeSet& free_states,
                         const Order& alpha);
double arimoto_gap_state_measurement(const std::vector<KrausChannel>& channels, const Pmf& prior,
                                     const DensityMatrix& rho, const Povm& m,
                                     const FreeSet& free_states, const FreeSet& free_povms,
                                     const Order& alpha);

struct ResultReport {
  std::string result;
  double alpha = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
};

struct ResultCheckOptions {
  std::uint64_t seed = 0;
  double constant_odds = 1.0;  // C in o(x) = sgn(alpha) C
  NumericIceOptions ice;
  PovmAscentOptions povm;
};

// Result 1: Arimoto MI vs the ratio of numerically optimised ICEs
// (informative measurement vs best uninformative play).
ResultReport check_result1(const Ensemble& e, const Povm& m, const Order& alpha, double tol,
                           const ResultCheckOptions& opts = {});
// Result 2: noisy MI with the inner POVM maximum vs the nQSB ratio.
ResultReport check_result2(const Ensemble& e, const KrausChannel& n, const Order& alpha,
                           double tol, const ResultCheckOptions& opts = {});
// Result 3, measurement form with an explicit free set.
ResultReport check_result3_measurement(const Ensemble& e, const Povm& m,
                                       const std::vector<Povm>& free_povms, const Order& alpha,
                                       double tol, const ResultCheckOptions& opts = {});
// Result 3, channel form (explicit free channels).
ResultReport check_result3_channel(const Ensemble& e, const KrausChannel& n,
                                   const std::vector<KrausChannel>& free_channels,
                                   const Order& alpha, double tol,
                                   const ResultCheckOptions& opts = {});
// Result 4, state form and state-measurement-pair form.
ResultReport check_result4_state(const std::vector<KrausChannel>& channels, const Pmf& prior,
                                 const DensityMatrix& rho, const Povm& m,
                                 const std::vector<DensityMatrix>& free_states,
                                 const Order& alpha, double tol,
                                 const ResultCheckOptions& opts = {});
ResultReport check_result4_pair(const std::vector<KrausChannel>& channels, const Pmf& prior,
                                const DensityMatrix& rho, const Povm& m,
                                const std::vector<DensityMatrix>& free_states,
                                const std::vector<Povm>& free_povms, const Order& alpha,
                                double tol, const ResultCheckOptions& opts = {});
// Result 5: classical horse betting with vs without side information.
ResultReport check_result5(const JointPmf& j, const Order& alpha, double tol,
                           const ResultCheckOptions& opts = {});

}  // namespace qbet

#endif  // QBET_GAMES_HPP
