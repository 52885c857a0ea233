#pragma once

#include <cmath>

namespace magicpol {

/// Kahan-Babuska (Neumaier) compensated accumulator. The sum-over-states
/// suffers documented multi-digit cancellation between near-resonant terms,
/// so the running sum carries an error term.
class CompensatedSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace magicpol
