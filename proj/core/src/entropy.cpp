#include "qbet/entropy.hpp"

#include <algorithm>
#include <cmath>

namespace qbet {

double log2_sum_exp2(const std::vector<double>& exponents) {
  double m = -kInf;
  for (double e : exponents) {
    if (e == kInf) return kInf;
    m = std::max(m, e);
  }
  if (m == -kInf) return -kInf;
  double s = 0.0;
  for (double e : exponents)
    if (e != -kInf) s += std::exp2(e - m);
  return m + std::log2(s);
}

double shannon_entropy(const Pmf& p) {
  double h = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    double pi = p[i];
    if (pi > 0.0) h -= pi * std::log2(pi);
  }
  return h;
}

namespace {

// log2 sum_x p(x)^alpha over the support, for finite alpha != 0.
double log2_power_sum(const Pmf& p, double alpha) {
  std::vector<double> exps;
  exps.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] > 0.0) exps.push_back(alpha * std::log2(p[i]));
  return log2_sum_exp2(exps);
}

void require_full_support(const Pmf& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!(p[i] > 0.0))
      throw DivergentEntropy("renyi_entropy: negative orders require full support");
}

// Product-support positivity needed by the negative orders of H_alpha(X|G).
void require_positive_on_product_support(const JointPmf& j) {
  Pmf px = j.marginal_x();
  Pmf pg = j.marginal_g();
  for (std::size_t x = 0; x < j.num_x(); ++x) {
    if (!(px[x] > 0.0)) continue;
    for (std::size_t g = 0; g < j.num_g(); ++g) {
      if (!(pg[g] > 0.0)) continue;
      if (!(j(x, g) > 0.0))
        throw DivergentEntropy(
            "arimoto_cond_entropy: negative orders require positive joint entries on the product "
            "support");
    }
  }
}

}  // namespace

double renyi_entropy(const Pmf& p, const Order& alpha) {
  switch (alpha.classify()) {
    case OrderClass::ZERO:
      return std::log2(static_cast<double>(p.support().size()));
    case OrderClass::ONE:
      return shannon_entropy(p);
    case OrderClass::POS_INF: {
      double pmax = *std::max_element(p.probs().begin(), p.probs().end());
      return -std::log2(pmax);
    }
    case OrderClass::NEG_INF: {
      require_full_support(p);
      double pmin = *std::min_element(p.probs().begin(), p.probs().end());
      return -std::log2(pmin);
    }
    case OrderClass::NEGATIVE:
      require_full_support(p);
      [[fallthrough]];
    case OrderClass::ZERO_ONE:
    case OrderClass::GT_ONE: {
      double a = alpha.value();
      return log2_power_sum(p, a) / (1.0 - a);
    }
  }
  return 0.0;  // unreachable
}

double renyi_probability(const Pmf& p, const Order& alpha) {
  return std::exp2(-renyi_entropy(p, alpha));
}

double arimoto_cond_entropy(const JointPmf& j, const Order& alpha) {
  switch (alpha.classify()) {
    case OrderClass::ZERO: {
      Pmf pg = j.marginal_g();
      std::size_t best = 0;
      for (std::size_t g = 0; g < j.num_g(); ++g) {
        if (pg[g] <= kSupportEps) continue;
        std::size_t n = 0;
        for (std::size_t x = 0; x < j.num_x(); ++x)
          if (j(x, g) > kSupportEps) ++n;
        best = std::max(best, n);
      }
      return std::log2(static_cast<double>(best));
    }
    case OrderClass::ONE: {
      // H(X|G) = -sum p(x,g) log2 p(x|g)
      Pmf pg = j.marginal_g();
      double h = 0.0;
      for (std::size_t g = 0; g < j.num_g(); ++g) {
        if (!(pg[g] > 0.0)) continue;
        for (std::size_t x = 0; x < j.num_x(); ++x) {
          double pxg = j(x, g);
          if (pxg > 0.0) h -= pxg * std::log2(pxg / pg[g]);
        }
      }
      return h;
    }
    case OrderClass::POS_INF: {
      double s = 0.0;
      for (std::size_t g = 0; g < j.num_g(); ++g) {
        double m = 0.0;
        for (std::size_t x = 0; x < j.num_x(); ++x) m = std::max(m, j(x, g));
        s += m;
      }
      return -std::log2(s);
    }
    case OrderClass::NEG_INF: {
      require_positive_on_product_support(j);
      Pmf px = j.marginal_x();
      Pmf pg = j.marginal_g();
      double s = 0.0;
      for (std::size_t g = 0; g < j.num_g(); ++g) {
        if (!(pg[g] > 0.0)) continue;
        double m = kInf;
        for (std::size_t x = 0; x < j.num_x(); ++x)
          if (px[x] > 0.0) m = std::min(m, j(x, g));
        s += m;
      }
      return -std::log2(s);
    }
    case OrderClass::NEGATIVE:
      require_positive_on_product_support(j);
      [[fallthrough]];
    case OrderClass::ZERO_ONE:
    case OrderClass::GT_ONE: {
      double a = alpha.value();
      Pmf px = j.marginal_x();
      Pmf pg = j.marginal_g();
      std::vector<double> outer;
      outer.reserve(j.num_g());
      for (std::size_t g = 0; g < j.num_g(); ++g) {
        if (a < 0.0 && !(pg[g] > 0.0)) continue;
        std::vector<double> inner;
        inner.reserve(j.num_x());
        for (std::size_t x = 0; x < j.num_x(); ++x) {
          if (a < 0.0 && !(px[x] > 0.0)) continue;
          double v = j(x, g);
          if (v > 0.0) inner.push_back(a * std::log2(v));
        }
        if (inner.empty()) continue;  // null column contributes nothing
        outer.push_back(log2_sum_exp2(inner) / a);
      }
      double log_outer = log2_sum_exp2(outer);
      return a / (1.0 - a) * log_outer;
    }
  }
  return 0.0;  // unreachable
}

double cond_renyi_probability(const JointPmf& j, const Order& alpha) {
  return std::exp2(-arimoto_cond_entropy(j, alpha));
}

double arimoto_mi(const JointPmf& j, const Order& alpha) {
  double hx = renyi_entropy(j.marginal_x(), alpha);
  double hxg = arimoto_cond_entropy(j, alpha);
  return sgn(alpha.value()) * (hx - hxg);
}

}  // namespace qbet
