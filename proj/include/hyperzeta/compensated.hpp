#pragma once

#include <cmath>

namespace hyperzeta {

// Compensated (Neumaier) accumulator: the rounding error of each add is
// captured in a running correction term, so summing 10^7 values stays within
// a few eps of the exact result instead of drifting with N.
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

} // namespace hyperzeta
