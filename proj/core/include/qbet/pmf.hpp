#ifndef QBET_PMF_HPP
#define QBET_PMF_HPP

#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "qbet/errors.hpp"

namespace qbet {

inline constexpr double kPmfSumTol = 1e-12;
inline constexpr double kSupportEps = 1e-12;

// A probability mass function over a finite alphabet. Entries must be
// non-negative and sum to one within 1e-12.
class Pmf {
 public:
  Pmf() = default;
  explicit Pmf(std::vector<double> probs) : p_(checked(std::move(probs))) {}

  static Pmf uniform(std::size_t n) {
    return Pmf(std::vector<double>(n, 1.0 / static_cast<double>(n)));
  }
  static Pmf point_mass(std::size_t n, std::size_t at) {
    std::vector<double> v(n, 0.0);
    v.at(at) = 1.0;
    return Pmf(v);
  }
  // Normalises a non-negative weight vector.
  static Pmf normalized(std::vector<double> weights) {
    double s = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (!(s > 0.0) || !std::isfinite(s))
      throw InvalidDistribution("Pmf::normalized: weights must have positive finite sum");
    for (double& w : weights) w /= s;
    return Pmf(std::move(weights));
  }

  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }
  const std::vector<double>& probs() const { return p_; }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < p_.size(); ++i)
      if (p_[i] > kSupportEps) s.push_back(i);
    return s;
  }
  bool full_support() const { return support().size() == p_.size(); }

 private:
  static std::vector<double> checked(std::vector<double> p) {
    if (p.empty()) throw InvalidDistribution("Pmf: empty alphabet");
    if (p.size() > 64) throw InvalidDistribution("Pmf: alphabet larger than the 64-symbol cap");
    double s = 0.0;
    for (double x : p) {
      if (!(x >= 0.0) || !std::isfinite(x))
        throw InvalidDistribution("Pmf: entries must be finite and non-negative");
      s += x;
    }
    if (std::abs(s - 1.0) > 1e-9) throw InvalidDistribution("Pmf: entries must sum to 1");
    // absorb sub-1e-9 drift so the 1e-12 sum invariant holds downstream
    if (std::abs(s - 1.0) > kPmfSumTol)
      for (double& x : p) x /= s;
    return p;
  }

  std::vector<double> p_;
};

// Clamp stray negatives (optimizer probe points) and renormalise.
inline Pmf clamped_pmf(std::vector<double> v) {
  double s = 0.0;
  for (double& x : v) {
    if (!(x > 0.0)) x = 0.0;
    s += x;
  }
  if (!(s > 0.0) || !std::isfinite(s))
    throw InvalidDistribution("clamped_pmf: no positive mass");
  for (double& x : v) x /= s;
  return Pmf(std::move(v));
}

// A stochastic matrix p(g|x): one PMF over G per input symbol x.
class CondPmf {
 public:
  CondPmf() = default;
  explicit CondPmf(std::vector<std::vector<double>> rows) {
    if (rows.empty()) throw InvalidDistribution("CondPmf: no rows");
    std::size_t m = rows.front().size();
    rows_.reserve(rows.size());
    for (auto& r : rows) {
      if (r.size() != m) throw ShapeMismatch("CondPmf: ragged rows");
      rows_.emplace_back(std::move(r));
    }
  }

  std::size_t num_inputs() const { return rows_.size(); }
  std::size_t num_outputs() const { return rows_.front().size(); }
  double operator()(std::size_t x, std::size_t g) const { return rows_[x][g]; }
  const Pmf& row(std::size_t x) const { return rows_[x]; }

 private:
  std::vector<Pmf> rows_;
};

// A joint PMF p(x,g) over X x G, stored row-major in x.
class JointPmf {
 public:
  JointPmf() = default;
  explicit JointPmf(std::vector<std::vector<double>> p) : p_(checked(std::move(p))) {}

  // p(x,g) = p(g|x) p(x)
  static JointPmf from_conditional(const CondPmf& cond, const Pmf& prior) {
    if (cond.num_inputs() != prior.size())
      throw ShapeMismatch("JointPmf::from_conditional: |X| mismatch");
    std::vector<std::vector<double>> j(prior.size(),
                                       std::vector<double>(cond.num_outputs(), 0.0));
    for (std::size_t x = 0; x < prior.size(); ++x)
      for (std::size_t g = 0; g < cond.num_outputs(); ++g) j[x][g] = cond(x, g) * prior[x];
    return JointPmf(std::move(j));
  }

  std::size_t num_x() const { return p_.size(); }
  std::size_t num_g() const { return p_.front().size(); }
  double operator()(std::size_t x, std::size_t g) const { return p_[x][g]; }
  const std::vector<std::vector<double>>& values() const { return p_; }

  Pmf marginal_x() const {
    std::vector<double> m(num_x(), 0.0);
    for (std::size_t x = 0; x < num_x(); ++x)
      for (std::size_t g = 0; g < num_g(); ++g) m[x] += p_[x][g];
    return Pmf::normalized(std::move(m));
  }
  Pmf marginal_g() const {
    std::vector<double> m(num_g(), 0.0);
    for (std::size_t x = 0; x < num_x(); ++x)
      for (std::size_t g = 0; g < num_g(); ++g) m[g] += p_[x][g];
    return Pmf::normalized(std::move(m));
  }

  // p(x|g) for a fixed g with positive marginal mass.
  Pmf condition_on_g(std::size_t g) const {
    std::vector<double> col(num_x(), 0.0);
    double s = 0.0;
    for (std::size_t x = 0; x < num_x(); ++x) {
      col[x] = p_[x][g];
      s += col[x];
    }
    if (s <= kSupportEps)
      throw DegenerateDistribution("JointPmf::condition_on_g: conditioning on a null event");
    for (double& c : col) c /= s;
    return Pmf(std::move(col));
  }

  // Conditional p(g|x) on the rows with p(x) > 0; null rows are replaced by
  // a uniform row so the factorisation p(g|x) p(x) still reproduces p(x,g).
  CondPmf conditional_g_given_x() const {
    std::vector<std::vector<double>> rows(num_x(), std::vector<double>(num_g(), 0.0));
    for (std::size_t x = 0; x < num_x(); ++x) {
      double s = 0.0;
      for (std::size_t g = 0; g < num_g(); ++g) s += p_[x][g];
      if (s <= kSupportEps) {
        for (std::size_t g = 0; g < num_g(); ++g) rows[x][g] = 1.0 / static_cast<double>(num_g());
      } else {
        for (std::size_t g = 0; g < num_g(); ++g) rows[x][g] = p_[x][g] / s;
      }
    }
    return CondPmf(std::move(rows));
  }

 private:
  static std::vector<std::vector<double>> checked(std::vector<std::vector<double>> p) {
    if (p.empty() || p.front().empty()) throw InvalidDistribution("JointPmf: empty");
    if (p.size() > 64 || p.front().size() > 64)
      throw InvalidDistribution("JointPmf: alphabet larger than the 64-symbol cap");
    double s = 0.0;
    std::size_t m = p.front().size();
    for (const auto& row : p) {
      if (row.size() != m) throw ShapeMismatch("JointPmf: ragged rows");
      for (double v : row) {
        if (!(v >= 0.0) || !std::isfinite(v))
          throw InvalidDistribution("JointPmf: entries must be finite and non-negative");
        s += v;
      }
    }
    if (std::abs(s - 1.0) > 1e-9) throw InvalidDistribution("JointPmf: entries must sum to 1");
    if (std::abs(s - 1.0) > kPmfSumTol)
      for (auto& row : p)
        for (double& v : row) v /= s;
    return p;
  }

  std::vector<std::vector<double>> p_;
};

}  // namespace qbet

#endif  // QBET_PMF_HPP
