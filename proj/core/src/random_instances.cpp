#include "qbet/random_instances.hpp"

#include <cmath>

#include "qbet/errors.hpp"

namespace qbet {

Pmf random_pmf(RandomSource& rs, std::size_t n) {
  std::vector<double> v(n);
  for (double& x : v) x = -std::log(std::max(rs.uniform(), 1e-300));
  return Pmf::normalized(std::move(v));
}

Pmf random_pmf_full_support(RandomSource& rs, std::size_t n, double min_mass) {
  Pmf p = random_pmf(rs, n);
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = p[i] * (1.0 - n * min_mass) + min_mass;
  return Pmf::normalized(std::move(v));
}

CondPmf random_cond_pmf(RandomSource& rs, std::size_t num_inputs, std::size_t num_outputs,
                        bool full_support) {
  std::vector<std::vector<double>> rows;
  rows.reserve(num_inputs);
  for (std::size_t x = 0; x < num_inputs; ++x) {
    Pmf r = full_support ? random_pmf_full_support(rs, num_outputs) : random_pmf(rs, num_outputs);
    rows.push_back(r.probs());
  }
  return CondPmf(std::move(rows));
}

JointPmf random_joint_pmf(RandomSource& rs, std::size_t num_x, std::size_t num_g,
                          bool full_support) {
  std::vector<std::vector<double>> j(num_x, std::vector<double>(num_g, 0.0));
  double s = 0.0;
  for (auto& row : j)
    for (double& v : row) {
      v = -std::log(std::max(rs.uniform(), 1e-300));
      if (full_support) v += 1e-3;
      s += v;
    }
  for (auto& row : j)
    for (double& v : row) v /= s;
  return JointPmf(std::move(j));
}

DensityMatrix random_state(RandomSource& rs, int dim) {
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < dim; ++k) g(i, k) = rs.cgaussian();
  Matrix w = g * g.adjoint();
  w /= w.trace().real();
  w = 0.5 * (w + w.adjoint().eval());  // scrub roundoff asymmetry
  return DensityMatrix(std::move(w));
}

DensityMatrix random_pure_state(RandomSource& rs, int dim) {
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = rs.cgaussian();
  return DensityMatrix::pure(v);
}

Povm random_povm(RandomSource& rs, int dim, std::size_t outcomes) {
  std::vector<Matrix> raw;
  raw.reserve(outcomes);
  Matrix s = Matrix::Zero(dim, dim);
  for (std::size_t a = 0; a < outcomes; ++a) {
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int k = 0; k < dim; ++k) g(i, k) = rs.cgaussian();
    Matrix psd = g * g.adjoint();
    raw.push_back(psd);
    s += psd;
  }
  Matrix isq = herm_inv_sqrt(s);
  std::vector<Matrix> els;
  els.reserve(outcomes);
  for (Matrix& a : raw) {
    Matrix e = isq * a * isq;
    e = 0.5 * (e + e.adjoint().eval());
    els.push_back(std::move(e));
  }
  return Povm(std::move(els));
}

KrausChannel random_channel(RandomSource& rs, int dim, std::size_t kraus_rank) {
  // Haar isometry V : C^d -> C^(d*k) via QR of a Gaussian block, sliced into
  // Kraus operators.
  const int rows = dim * static_cast<int>(kraus_rank);
  Matrix g(rows, dim);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < dim; ++k) g(i, k) = rs.cgaussian();
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(rows, dim);
  std::vector<Matrix> kraus;
  kraus.reserve(kraus_rank);
  for (std::size_t i = 0; i < kraus_rank; ++i)
    kraus.push_back(q.middleRows(static_cast<int>(i) * dim, dim));
  return KrausChannel(std::move(kraus));
}

Ensemble random_ensemble(RandomSource& rs, int dim, std::size_t size) {
  StateSet states;
  states.reserve(size);
  for (std::size_t i = 0; i < size; ++i) states.push_back(random_state(rs, dim));
  Pmf priors = random_pmf_full_support(rs, size);
  return Ensemble(std::move(states), std::move(priors));
}

RandomInstance random_instance(std::uint64_t seed, int dim, std::size_t states,
                               std::size_t outcomes, std::size_t kraus_rank) {
  if (dim > 4 || states > 6 || outcomes > 6 || kraus_rank > 6)
    throw InvalidDistribution("random_instance: desk-scale caps are d <= 4, counts <= 6");
  RandomSource rs(seed);
  Ensemble e = random_ensemble(rs, dim, states);
  Povm m = random_povm(rs, dim, outcomes);
  KrausChannel n = random_channel(rs, dim, kraus_rank);
  return {std::move(e), std::move(m), std::move(n)};
}

}  // namespace qbet
