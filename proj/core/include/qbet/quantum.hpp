#ifndef QBET_QUANTUM_HPP
#define QBET_QUANTUM_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "qbet/pmf.hpp"

namespace qbet {

using Cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kHermTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;

double max_abs(const Matrix& a);
bool is_hermitian(const Matrix& a, double tol = kHermTol);
// smallest eigenvalue of a Hermitian matrix
double min_eigenvalue(const Matrix& a);
double max_eigenvalue(const Matrix& a);
// Hermitian principal square root / inverse square root
Matrix herm_sqrt(const Matrix& a);
Matrix herm_inv_sqrt(const Matrix& a, double floor = 1e-14);

// A trace-one positive semidefinite operator. Inputs violating the
// invariants are rejected, not projected.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m);
  static DensityMatrix pure(const Vector& ket);
  static DensityMatrix maximally_mixed(int dim);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

// POVM: PSD elements summing to the identity.
class Povm {
 public:
  explicit Povm(std::vector<Matrix> elements);
  static Povm computational_basis(int dim);
  // N_a = q(a) * I
  static Povm uninformative(int dim, const Pmf& q);

  int dim() const { return static_cast<int>(elements_.front().rows()); }
  std::size_t num_outcomes() const { return elements_.size(); }
  const Matrix& element(std::size_t a) const { return elements_[a]; }
  const std::vector<Matrix>& elements() const { return elements_; }

 private:
  std::vector<Matrix> elements_;
};

using StateSet = std::vector<DensityMatrix>;

struct Ensemble {
  StateSet states;
  Pmf priors;

  Ensemble(StateSet s, Pmf p);
  int dim() const { return states.front().dim(); }
  std::size_t size() const { return states.size(); }
};

// A channel in Kraus form. CPTP by default; trace-nonincreasing maps are
// accepted when the subchannel flag is set.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<Matrix> kraus, bool allow_subchannel = false);
  static KrausChannel identity(int dim);
  static KrausChannel depolarizing(int dim, double strength);

  int dim_in() const { return static_cast<int>(kraus_.front().cols()); }
  int dim_out() const { return static_cast<int>(kraus_.front().rows()); }
  const std::vector<Matrix>& kraus() const { return kraus_; }
  bool is_subchannel() const { return subchannel_; }

 private:
  std::vector<Matrix> kraus_;
  bool subchannel_ = false;
};

// Born-rule conditional PMF: row x holds tr[M_g rho_x].
CondPmf born_cond_pmf(const Povm& m, const StateSet& states);

DensityMatrix apply_channel(const KrausChannel& n, const DensityMatrix& rho);

// Heisenberg-picture POVM N^dagger(M) with elements sum_i K_i^dag M_g K_i.
Povm adjoint_apply(const KrausChannel& n, const Povm& m);

struct UninformativeWitness {
  bool uninformative;
  Pmf q;  // candidate q(a) = tr[M_a]/d
};
UninformativeWitness is_uninformative(const Povm& m, double tol = 1e-9);

// Classical post-processing: N_x = sum_a q(x|a) M_a. `post` has one row per
// outcome of m.
Povm simulate_measurement(const Povm& m, const CondPmf& post);

}  // namespace qbet

#endif  // QBET_QUANTUM_HPP
