#ifndef QBET_RANDOM_INSTANCES_HPP
#define QBET_RANDOM_INSTANCES_HPP

#include <cstdint>
#include <random>

#include "qbet/quantum.hpp"

namespace qbet {

// Deterministic source for all randomised machinery; never global.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  double uniform() { return unif_(rng_); }
  double gaussian() { return gauss_(rng_); }
  Cplx cgaussian() { return Cplx(gauss_(rng_), gauss_(rng_)); }
  std::uint64_t bits() { return rng_(); }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> unif_{0.0, 1.0};
  std::normal_distribution<double> gauss_{0.0, 1.0};
};

// Dirichlet(1,...,1) sample.
Pmf random_pmf(RandomSource& rs, std::size_t n);
// Full-support variant with entries bounded away from zero.
Pmf random_pmf_full_support(RandomSource& rs, std::size_t n, double min_mass = 1e-3);
CondPmf random_cond_pmf(RandomSource& rs, std::size_t num_inputs, std::size_t num_outputs,
                        bool full_support = true);
JointPmf random_joint_pmf(RandomSource& rs, std::size_t num_x, std::size_t num_g,
                          bool full_support = true);

// Wishart-style state G G^dag / tr.
DensityMatrix random_state(RandomSource& rs, int dim);
DensityMatrix random_pure_state(RandomSource& rs, int dim);
// Random PSD tuple normalised by S^(-1/2) M_a S^(-1/2).
Povm random_povm(RandomSource& rs, int dim, std::size_t outcomes);
// Truncation of a Haar-random isometry into Kraus operators.
KrausChannel random_channel(RandomSource& rs, int dim, std::size_t kraus_rank);
Ensemble random_ensemble(RandomSource& rs, int dim, std::size_t size);

struct RandomInstance {
  Ensemble ensemble;
  Povm povm;
  KrausChannel channel;
};

// Deterministic bundle used by the verification suites: d <= 4, counts <= 6.
RandomInstance random_instance(std::uint64_t seed, int dim, std::size_t states,
                               std::size_t outcomes, std::size_t kraus_rank);

}  // namespace qbet

#endif  // QBET_RANDOM_INSTANCES_HPP
