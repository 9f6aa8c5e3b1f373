#pragma once

#include "lemniscate/numerics.hpp"

#include <cmath>
#include <string>

namespace testing_support {

/// Digits of relative agreement between a computed value and a decimal string.
inline double agreement(const lemniscate::BigFloat& value, const std::string& reference) {
    const lemniscate::BigFloat ref = lemniscate::BigFloat::parse(reference, value.precision());
    const lemniscate::BigFloat dev = lemniscate::abs(value - ref);
    if (dev.is_zero()) return 1e9;
    return -(dev.log10_abs() - ref.log10_abs());
}

}  // namespace testing_support
