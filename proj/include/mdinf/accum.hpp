#pragma once

#include <cmath>

namespace mdinf::detail {

// Neumaier-compensated accumulator: keeps a running correction so long
// alternating sums do not lose low-order bits.
template <typename T = double>
struct CompensatedSum {
    T sum{0};
    T carry{0};

    void add(T x) {
        T t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            carry += (sum - t) + x;
        } else {
            carry += (x - t) + sum;
        }
        sum = t;
    }

    T value() const { return sum + carry; }
};

}  // namespace mdinf::detail
