#ifndef BCF_OUTCOME_HPP
#define BCF_OUTCOME_HPP

#include <cmath>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <variant>

#include "bcf/multi_index.hpp"
#include "bcf/rational.hpp"

namespace bcf {

// Relative threshold below which a floating-point tail denominator counts
// as a pole. Exact evaluation only treats an exact zero as a pole.
inline constexpr double kPoleTolerance = 1e-13;

struct Pole {
  MultiIndex branch;  // node whose tail denominator vanished
};

// Value of an approximant at a point, or the branch where evaluation hit a pole.
template <class T>
class EvalOutcome {
 public:
  EvalOutcome(T value) : v_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  EvalOutcome(Pole pole) : v_(std::move(pole)) {}  // NOLINT(google-explicit-constructor)

  bool has_value() const noexcept { return std::holds_alternative<T>(v_); }
  explicit operator bool() const noexcept { return has_value(); }

  const T& value() const {
    if (!has_value()) throw std::runtime_error("approximant has a pole at branch " + pole().branch.str());
    return std::get<T>(v_);
  }
  const Pole& pole() const { return std::get<Pole>(v_); }

 private:
  std::variant<T, Pole> v_;
};

// True when `denominator` should be treated as zero given the magnitude of
// the terms that were summed into it.
template <class T>
bool vanishes(const T& denominator, double scale) {
  if constexpr (std::is_same_v<T, Rational>) {
    (void)scale;
    return denominator == 0;
  } else {
    return !(std::fabs(denominator) >= kPoleTolerance * scale);
  }
}

}  // namespace bcf

#endif  // BCF_OUTCOME_HPP
