#ifndef QBET_ERRORS_HPP
#define QBET_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace qbet {

struct DivergentEntropy : std::runtime_error {
  explicit DivergentEntropy(const std::string& what) : std::runtime_error(what) {}
};

struct DivergentValue : std::runtime_error {
  explicit DivergentValue(const std::string& what) : std::runtime_error(what) {}
};

struct AlphabetMismatch : std::invalid_argument {
  explicit AlphabetMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct ShapeMismatch : std::invalid_argument {
  explicit ShapeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct DimensionMismatch : std::invalid_argument {
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidDistribution : std::invalid_argument {
  explicit InvalidDistribution(const std::string& what) : std::invalid_argument(what) {}
};

struct DegenerateDistribution : std::runtime_error {
  explicit DegenerateDistribution(const std::string& what) : std::runtime_error(what) {}
};

struct UndefinedAtZero : std::domain_error {
  explicit UndefinedAtZero(const std::string& what) : std::domain_error(what) {}
};

struct EmptyFreeSet : std::invalid_argument {
  explicit EmptyFreeSet(const std::string& what) : std::invalid_argument(what) {}
};

// Optimizer failure that still carries the best point found so the caller
// can decide whether it is good enough.
struct OptimizerDidNotConverge : std::runtime_error {
  OptimizerDidNotConverge(const std::string& what, std::vector<double> iterate, double value)
      : std::runtime_error(what), best_iterate(std::move(iterate)), best_value(value) {}
  std::vector<double> best_iterate;
  double best_value;
};

struct MinimaxGapExceeded : std::runtime_error {
  MinimaxGapExceeded(const std::string& what, double minmax, double maxmin)
      : std::runtime_error(what), min_max(minmax), max_min(maxmin) {}
  double min_max;
  double max_min;
};

}  // namespace qbet

#endif  // QBET_ERRORS_HPP
