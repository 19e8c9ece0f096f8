#pragma once

#include <cmath>

namespace zeta_bounds {

/// Compensated (Neumaier variant of Kahan) accumulator.
///
/// The Neumaier branch keeps the compensation correct when an addend is
/// larger in magnitude than the running sum, which happens when prime sums
/// mix positive and negative correction terms.
template <typename Value = double>
class KahanSum {
 public:
  KahanSum() = default;
  explicit KahanSum(Value initial) : sum_(initial) {}

  KahanSum& operator+=(Value value) {
    Value const t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  KahanSum& operator-=(Value value) { return *this += -value; }

  Value value() const { return sum_ + compensation_; }
  operator Value() const { return value(); }

 private:
  Value sum_{0};
  Value compensation_{0};
};

}  // namespace zeta_bounds
