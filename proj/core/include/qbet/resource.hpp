#ifndef QBET_RESOURCE_HPP
#define QBET_RESOURCE_HPP

#include <optional>
#include <string>

#include "qbet/divergence.hpp"
#include "qbet/quantum.hpp"

namespace qbet {

enum class MonotoneMethod { CLOSED_FORM, BISECTION_ORACLE, MINIMAX };

struct MonotoneReport {
  std::string measure;
  double value = 0.0;
  MonotoneMethod method = MonotoneMethod::CLOSED_FORM;
  std::optional<Pmf> witness_pmf;         // q achieving the free-side optimum
  std::optional<StateSet> witness_states; // state set achieving the outer max
};

// Generalised robustness of informativeness: sum_a lambda_max(M_a) - 1.
double robustness_informativeness(const Povm& m);
// Weight of informativeness: 1 - sum_a lambda_min(M_a).
double weight_informativeness(const Povm& m);

// Independent feasibility-bisection oracles; each candidate is certified by
// constructing the mixing witnesses and checking them PSD.
double robustness_bisection_oracle(const Povm& m, double tol = 1e-11);
double weight_bisection_oracle(const Povm& m, double tol = 1e-11);

struct MeasuredDivOptions {
  std::uint64_t seed = 0;
  int num_starts = 10;
};

// Measured Sibson divergence: max over input PMFs of the Sibson conditional
// divergence between the Born conditionals of the two POVMs.
double measured_sibson_div(const Povm& m, const Povm& n, const StateSet& s, const Order& alpha,
                           const MeasuredDivOptions& opts = {});

struct InformativenessOptions {
  std::uint64_t seed = 0;
  int num_starts = 14;
  double minimax_tol = 1e-6;
  bool certify = true;  // throw MinimaxGapExceeded when the two orders differ
};

struct InformativenessResult {
  double value = 0.0;     // the certified measure (max-min route)
  double min_max = 0.0;   // min over uninformative q of max over p
  double max_min = 0.0;   // max over p of min over q (Sibson capacity)
  Pmf witness_q;          // minimiser on the free side
  Pmf witness_p;          // maximiser over inputs
};

// E^S_alpha(M): min over uninformative measurements of the measured Sibson
// divergence, computed in both optimisation orders and certified equal.
InformativenessResult informativeness_measure(const Povm& m, const StateSet& s,
                                              const Order& alpha,
                                              const InformativenessOptions& opts = {});

struct AlphaMeasureOptions {
  std::uint64_t seed = 0;
  std::size_t set_size = 0;  // 0: d*d states
  int num_starts = 8;
  int max_iters = 120;
  int capacity_starts = 8;
};

struct AlphaMeasureResult {
  double value = 0.0;   // M_alpha
  double e_alpha = 0.0; // E_alpha = max_S E^S_alpha
  StateSet witness;     // best state set found
};

// M_alpha(M) = sgn(alpha) 2^(sgn(alpha) E_alpha(M)) - sgn(alpha), with the
// exact robustness/weight closed forms at the infinite orders.
AlphaMeasureResult alpha_measure(const Povm& m, const Order& alpha,
                                 const AlphaMeasureOptions& opts = {});

// Evaluates E^S_alpha for a fixed state set via the Sibson capacity route
// (fast path used by the monotone suite and the outer state-set search).
// `warm_prior` optionally carries the inner capacity achiever between calls.
double informativeness_of_state_set(const Povm& m, const StateSet& s, const Order& alpha,
                                    std::uint64_t seed = 0, int capacity_starts = 8,
                                    std::vector<double>* warm_prior = nullptr);

struct MonotoneTrial {
  double alpha = 0.0;
  int trial = -1;        // -1 marks the faithfulness probe
  double simulated = 0.0;
  double original = 0.0;
  bool pass = false;
};

struct MonotoneSuiteReport {
  bool all_pass = true;
  std::vector<MonotoneTrial> trials;
};

struct MonotoneSuiteOptions {
  std::uint64_t seed = 0;
  int trials = 20;
  std::vector<double> alphas = {-kInf, -2.0, -0.5, 0.5, 2.0, kInf};
  double slack = 1e-6;
  AlphaMeasureOptions measure;
};

// Result-7 battery: faithfulness probe plus monotonicity of M_alpha under
// random post-processings. Finite-order comparisons are made on the union
// of the witness state sets found for the two POVMs, so search shortfall
// cannot fake a violation.
MonotoneSuiteReport monotone_suite(const Povm& m, const MonotoneSuiteOptions& opts = {});

}  // namespace qbet

#endif  // QBET_RESOURCE_HPP
