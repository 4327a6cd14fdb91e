#ifndef QBET_ORDER_HPP
#define QBET_ORDER_HPP

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "qbet/errors.hpp"

namespace qbet {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Sign convention used throughout: sgn(w) = +1 for w >= 0 and -1 for w < 0.
// Note sgn(0) = +1.
inline int sgn(double w) { return (w >= 0.0) ? +1 : -1; }

enum class OrderClass {
  NEG_INF,   // alpha = -inf
  NEGATIVE,  // alpha in (-inf, 0)
  ZERO,      // alpha = 0 exactly
  ZERO_ONE,  // alpha in (0, 1)
  ONE,       // alpha = 1 exactly
  GT_ONE,    // alpha in (1, inf)
  POS_INF,   // alpha = +inf
};

// An extended-real Renyi order alpha in R u {+inf, -inf}. The boundary
// orders 0 and 1 are detected by exact comparison; callers wanting
// near-limit behaviour must pass limit orders explicitly.
class Order {
 public:
  Order() : value_(1.0) {}
  explicit Order(double alpha) : value_(alpha) {
    if (std::isnan(alpha)) throw std::invalid_argument("Order: alpha must not be NaN");
  }

  static Order pos_inf() { return Order(kInf); }
  static Order neg_inf() { return Order(-kInf); }

  // Order induced by a risk parameter R = 1/alpha. R = +0.0 maps to +inf
  // and R = -0.0 maps to -inf (IEEE signed zero keeps the branch).
  static Order from_risk(double risk) {
    if (std::isnan(risk)) throw std::invalid_argument("Order: risk must not be NaN");
    if (risk == 0.0) return std::signbit(risk) ? neg_inf() : pos_inf();
    return Order(1.0 / risk);
  }

  double value() const { return value_; }

  OrderClass classify() const {
    if (value_ == kInf) return OrderClass::POS_INF;
    if (value_ == -kInf) return OrderClass::NEG_INF;
    if (value_ == 0.0) return OrderClass::ZERO;
    if (value_ == 1.0) return OrderClass::ONE;
    if (value_ < 0.0) return OrderClass::NEGATIVE;
    if (value_ < 1.0) return OrderClass::ZERO_ONE;
    return OrderClass::GT_ONE;
  }

  bool is_finite() const { return std::isfinite(value_); }
  bool is_negative() const { return value_ < 0.0 || value_ == -kInf; }
  int sign() const { return sgn(value_); }

  // R(alpha) = 1/alpha. The infinite orders map to the signed-zero risk
  // branches +0.0 and -0.0. alpha = 0 has unbounded risk.
  double risk() const {
    if (value_ == 0.0) throw UndefinedAtZero("Order::risk: R = 1/alpha is unbounded at alpha = 0");
    return 1.0 / value_;  // 1/inf = +0.0, 1/-inf = -0.0
  }

  bool operator==(const Order& o) const { return value_ == o.value_; }

 private:
  double value_;
};

inline std::string to_string(OrderClass c) {
  switch (c) {
    case OrderClass::NEG_INF: return "NEG_INF";
    case OrderClass::NEGATIVE: return "NEGATIVE";
    case OrderClass::ZERO: return "ZERO";
    case OrderClass::ZERO_ONE: return "ZERO_ONE";
    case OrderClass::ONE: return "ONE";
    case OrderClass::GT_ONE: return "GT_ONE";
    case OrderClass::POS_INF: return "POS_INF";
  }
  return "?";
}

}  // namespace qbet

#endif  // QBET_ORDER_HPP
