#include "qbet/quantum.hpp"

#include <cmath>

#include "qbet/errors.hpp"

namespace qbet {

double max_abs(const Matrix& a) { return a.cwiseAbs().maxCoeff(); }

bool is_hermitian(const Matrix& a, double tol) {
  return max_abs(a - a.adjoint()) <= tol;
}

double min_eigenvalue(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double max_eigenvalue(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

Matrix herm_sqrt(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix herm_inv_sqrt(const Matrix& a, double floor) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  Eigen::VectorXd ev = es.eigenvalues();
  Eigen::VectorXd inv(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    inv[i] = (ev[i] > floor) ? 1.0 / std::sqrt(ev[i]) : 0.0;
  return es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().adjoint();
}

DensityMatrix::DensityMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1)
    throw DimensionMismatch("DensityMatrix: square matrix required");
  if (!is_hermitian(m_)) throw InvalidDistribution("DensityMatrix: not Hermitian");
  if (min_eigenvalue(m_) < -kPsdTol)
    throw InvalidDistribution("DensityMatrix: not positive semidefinite");
  if (std::abs(m_.trace().real() - 1.0) > kTraceTol || std::abs(m_.trace().imag()) > kTraceTol)
    throw InvalidDistribution("DensityMatrix: trace must be 1");
}

DensityMatrix DensityMatrix::pure(const Vector& ket) {
  double n = ket.norm();
  if (!(n > 0.0)) throw InvalidDistribution("DensityMatrix::pure: zero vector");
  Vector v = ket / n;
  return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  return DensityMatrix(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

Povm::Povm(std::vector<Matrix> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw InvalidDistribution("Povm: no elements");
  const auto d = elements_.front().rows();
  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& e : elements_) {
    if (e.rows() != d || e.cols() != d) throw DimensionMismatch("Povm: ragged element dims");
    if (!is_hermitian(e)) throw InvalidDistribution("Povm: element not Hermitian");
    if (min_eigenvalue(e) < -kPsdTol)
      throw InvalidDistribution("Povm: element not positive semidefinite");
    sum += e;
  }
  if (max_abs(sum - Matrix::Identity(d, d)) > 1e-9)
    throw InvalidDistribution("Povm: elements must sum to the identity");
}

Povm Povm::computational_basis(int dim) {
  std::vector<Matrix> els;
  els.reserve(dim);
  for (int i = 0; i < dim; ++i) {
    Matrix e = Matrix::Zero(dim, dim);
    e(i, i) = 1.0;
    els.push_back(e);
  }
  return Povm(std::move(els));
}

Povm Povm::uninformative(int dim, const Pmf& q) {
  std::vector<Matrix> els;
  els.reserve(q.size());
  for (std::size_t a = 0; a < q.size(); ++a)
    els.push_back(q[a] * Matrix::Identity(dim, dim));
  return Povm(std::move(els));
}

Ensemble::Ensemble(StateSet s, Pmf p) : states(std::move(s)), priors(std::move(p)) {
  if (states.empty()) throw InvalidDistribution("Ensemble: no states");
  if (states.size() != priors.size())
    throw DimensionMismatch("Ensemble: states/priors length mismatch");
  for (const auto& st : states)
    if (st.dim() != states.front().dim())
      throw DimensionMismatch("Ensemble: mixed dimensions");
}

KrausChannel::KrausChannel(std::vector<Matrix> kraus, bool allow_subchannel)
    : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw InvalidDistribution("KrausChannel: no Kraus operators");
  const auto din = kraus_.front().cols();
  const auto dout = kraus_.front().rows();
  Matrix sum = Matrix::Zero(din, din);
  for (const Matrix& k : kraus_) {
    if (k.cols() != din || k.rows() != dout)
      throw DimensionMismatch("KrausChannel: ragged Kraus dims");
    sum += k.adjoint() * k;
  }
  Matrix gap = Matrix::Identity(din, din) - sum;
  if (max_abs(gap) <= 1e-9) {
    subchannel_ = false;
    return;
  }
  if (allow_subchannel && min_eigenvalue(gap) >= -kPsdTol) {
    subchannel_ = true;  // CPTNI
    return;
  }
  throw InvalidDistribution("KrausChannel: sum K^dag K must equal the identity (CPTP)");
}

KrausChannel KrausChannel::identity(int dim) {
  return KrausChannel({Matrix::Identity(dim, dim)});
}

KrausChannel KrausChannel::depolarizing(int dim, double strength) {
  // N(rho) = (1-s) rho + s I/d via the Heisenberg-Weyl (generalised Pauli) set
  if (strength < 0.0 || strength > 1.0)
    throw InvalidDistribution("depolarizing: strength in [0,1] required");
  std::vector<Matrix> kraus;
  const Cplx omega = std::exp(Cplx(0.0, 2.0 * M_PI / dim));
  Matrix shift = Matrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) shift((i + 1) % dim, i) = 1.0;
  Matrix clock = Matrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) clock(i, i) = std::pow(omega, i);
  double uniform_w = strength / static_cast<double>(dim * dim);
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      double w = uniform_w + ((a == 0 && b == 0) ? (1.0 - strength) : 0.0);
      Matrix u = Matrix::Identity(dim, dim);
      for (int i = 0; i < a; ++i) u = shift * u;
      for (int i = 0; i < b; ++i) u = clock * u;
      kraus.push_back(std::sqrt(w) * u);
    }
  }
  return KrausChannel(std::move(kraus));
}

CondPmf born_cond_pmf(const Povm& m, const StateSet& states) {
  if (states.empty()) throw InvalidDistribution("born_cond_pmf: no states");
  if (states.front().dim() != m.dim())
    throw DimensionMismatch("born_cond_pmf: POVM/state dimensions differ");
  std::vector<std::vector<double>> rows(states.size(),
                                        std::vector<double>(m.num_outcomes(), 0.0));
  for (std::size_t x = 0; x < states.size(); ++x) {
    double s = 0.0;
    for (std::size_t g = 0; g < m.num_outcomes(); ++g) {
      double v = (m.element(g) * states[x].matrix()).trace().real();
      rows[x][g] = (v > kSupportEps) ? v : 0.0;  // clip Born-rule roundoff
      s += rows[x][g];
    }
    for (double& v : rows[x]) v /= s;
  }
  return CondPmf(std::move(rows));
}

DensityMatrix apply_channel(const KrausChannel& n, const DensityMatrix& rho) {
  if (n.dim_in() != rho.dim())
    throw DimensionMismatch("apply_channel: channel/state dimensions differ");
  Matrix out = Matrix::Zero(n.dim_out(), n.dim_out());
  for (const Matrix& k : n.kraus()) out += k * rho.matrix() * k.adjoint();
  return DensityMatrix(std::move(out));
}

Povm adjoint_apply(const KrausChannel& n, const Povm& m) {
  if (n.dim_out() != m.dim())
    throw DimensionMismatch("adjoint_apply: channel output and POVM dimensions differ");
  if (n.is_subchannel())
    throw InvalidDistribution("adjoint_apply: CPTP channel required");
  std::vector<Matrix> els;
  els.reserve(m.num_outcomes());
  for (std::size_t g = 0; g < m.num_outcomes(); ++g) {
    Matrix e = Matrix::Zero(n.dim_in(), n.dim_in());
    for (const Matrix& k : n.kraus()) e += k.adjoint() * m.element(g) * k;
    els.push_back(std::move(e));
  }
  return Povm(std::move(els));
}

UninformativeWitness is_uninformative(const Povm& m, double tol) {
  const int d = m.dim();
  std::vector<double> q(m.num_outcomes(), 0.0);
  bool ok = true;
  for (std::size_t a = 0; a < m.num_outcomes(); ++a) {
    q[a] = m.element(a).trace().real() / d;
    if (max_abs(m.element(a) - q[a] * Matrix::Identity(d, d)) > tol) ok = false;
  }
  return {ok, Pmf::normalized(std::move(q))};
}

Povm simulate_measurement(const Povm& m, const CondPmf& post) {
  if (post.num_inputs() != m.num_outcomes())
    throw ShapeMismatch("simulate_measurement: post-processing rows must match POVM outcomes");
  const int d = m.dim();
  std::vector<Matrix> els(post.num_outputs(), Matrix::Zero(d, d));
  for (std::size_t x = 0; x < post.num_outputs(); ++x)
    for (std::size_t a = 0; a < m.num_outcomes(); ++a)
      els[x] += post(a, x) * m.element(a);
  return Povm(std::move(els));
}

}  // namespace qbet
