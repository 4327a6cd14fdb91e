#ifndef QBET_DIVERGENCE_HPP
#define QBET_DIVERGENCE_HPP

#include <optional>

#include "qbet/entropy.hpp"
#include "qbet/order.hpp"
#include "qbet/pmf.hpp"
#include "qbet/simplex_opt.hpp"

namespace qbet {

// Conditional Renyi divergence flavour.
enum class CrdVariant { SIBSON, CSISZAR, BLP };

// Renyi divergence D_alpha(p||q) in bits, non-negative for every extended
// order (the sgn(alpha)/(alpha-1) prefactor convention). Returns +inf when
// the order-dependent absolute-continuity condition fails.
double renyi_div(const Pmf& p, const Pmf& q, const Order& alpha);

// Conditional Renyi divergence of the chosen variant, with q_gx a full
// conditional (use broadcast_row to compare against a single PMF q_G).
double cond_renyi_div(CrdVariant variant, const CondPmf& p_gx, const CondPmf& q_gx,
                      const Pmf& p_x, const Order& alpha);

// q_G replicated across all inputs.
CondPmf broadcast_row(const Pmf& q, std::size_t num_inputs);

// Sibson's minimiser q*_G of D^S_alpha(p_{G|X} || q_G | p_X) for finite
// nonzero orders, q*(g) proportional to (sum_x p(x) p(g|x)^alpha)^(1/alpha).
std::optional<Pmf> sibson_optimal_output(const CondPmf& p_gx, const Pmf& p_x, const Order& alpha);

struct VariantMiOptions {
  std::uint64_t seed = 0;
  int num_starts = 4;
  // Numeric tolerance for accepting the Sibson q* identity before using the
  // closed form; on failure the simplex minimiser is used instead.
  double identity_tol = 1e-8;
};

// Mutual information min_{q_G} D^V_alpha(p_{G|X} || q_G | p_X) of the joint.
double variant_mi(CrdVariant variant, const JointPmf& j, const Order& alpha,
                  const VariantMiOptions& opts = {});

struct CapacityResult {
  double value = 0.0;
  Pmf input;            // argmax p_X
  double arimoto_value = 0.0;
  double sibson_value = 0.0;
};

struct CapacityOptions {
  std::uint64_t seed = 0;
  int num_starts = 20;
  double agreement_tol = 1e-6;  // |C^A - C^S| check (Arimoto vs Sibson)
  bool check_agreement = true;
};

// Renyi channel capacity C_alpha(p_{G|X}) = max_{p_X} I_alpha, computed by
// maximising Arimoto's mutual information and cross-checked against the
// Sibson route, which attains the same maximum.
CapacityResult renyi_capacity(const CondPmf& p_gx, const Order& alpha,
                              const CapacityOptions& opts = {});

// Sibson mutual information of the channel at a fixed input, evaluated via
// the closed-form output distribution when available.
double sibson_mi_closed_form(const CondPmf& p_gx, const Pmf& p_x, const Order& alpha);

}  // namespace qbet

#endif  // QBET_DIVERGENCE_HPP
