#ifndef QBET_TOOLS_VERIFY_SUITES_HPP
#define QBET_TOOLS_VERIFY_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qbet/serialization.hpp"

namespace qbet::suites {

struct CheckEntry {
  std::string name;
  double alpha = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double err = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckEntry> checks;
  bool all_pass = true;
  double max_err = 0.0;
  double seconds = 0.0;

  void add(CheckEntry e);
  Json to_json() const;
};

struct SuiteConfig {
  std::uint64_t seed = 7;
  int trials = 0;      // 0: use the suite's own default count
  double tol = 0.0;    // 0: use the suite's own tolerance
  bool verbose = false;
};

// Result 1: Arimoto MI vs the QSB ICE ratio on seeded qubit instances,
// alpha in {-8,-2,-0.5,0.5,2,8,+inf,-inf}, default 50 instances at 1e-6.
SuiteReport run_result1(const SuiteConfig& cfg);
// Corollaries 2-3: the infinite-order ratios against the exhaustive
// classical post-processing oracle, 1e-9.
SuiteReport run_corollaries23(const SuiteConfig& cfg);
// Result 2: noisy QSB with the nested measurement maximisation, d = 2, 1e-5.
SuiteReport run_result2(const SuiteConfig& cfg);
// Result 3: gaps for measurements and channels with explicit free sets.
SuiteReport run_result3(const SuiteConfig& cfg);
// Result 4: gaps for states and state-measurement pairs, explicit free sets.
SuiteReport run_result4(const SuiteConfig& cfg);
// Result 5: classical side-information advantage, 100 joints at 1e-8.
SuiteReport run_result5(const SuiteConfig& cfg);
// Result 6: measured-divergence measure vs Renyi capacity + Sion gap, 1e-6.
SuiteReport run_result6(const SuiteConfig& cfg);
// Result 7: robustness/weight closed forms vs oracles (1e-9), monotonicity
// and faithfulness of the alpha-measure.
SuiteReport run_result7(const SuiteConfig& cfg);
// Appendix A: Lemma 1/2 orderings and the Sibson q* identity.
SuiteReport run_lemmas(const SuiteConfig& cfg);
// Appendix A Lemma 3: the Arimoto and Sibson capacities coincide.
SuiteReport run_capacity_equality(const SuiteConfig& cfg);
// Appendix B: decomposition identities, optimal strategies, Lemma 4/5.
SuiteReport run_betting(const SuiteConfig& cfg);
// Figure-style sweeps: curvature regimes and the sign flip at alpha = 0.
SuiteReport run_figures(const SuiteConfig& cfg);

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);
std::vector<std::string> suite_names();

// Sweep data used by the CLI and the figure checks.
struct SweepTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};
SweepTable sweep_isoelastic(const std::vector<double>& risks, double wmin, double wmax,
                            int steps);
SweepTable sweep_ice_vs_alpha(std::uint64_t seed, const std::vector<double>& alphas);
SweepTable sweep_gap_vs_alpha(std::uint64_t seed, const std::vector<double>& alphas);
std::string to_csv(const SweepTable& table);

}  // namespace qbet::suites

#endif
