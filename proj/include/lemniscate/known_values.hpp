#pragma once

#include "lemniscate/closed_forms.hpp"

#include <string>
#include <vector>

namespace lemniscate {

/// A published closed form, kept as data so tests and the verification
/// suite can compare computed results against it.
struct KnownSum {
    ClosedFamily family;
    int m;
    GammaPiExpr value;
};

struct KnownIntegral {
    BerndtSign sign;
    int m;
    GammaPiExpr value;
};

/// Eight cosh-family values (exponents 3, 5, 7, 9 for cube; 4, 8; 5, 9) and
/// eight sinh-family values (exponents 5, 7, 9, 11 for cube; 6, 10; 7, 11).
const std::vector<KnownSum>& known_sums();
/// Integral values: plus m = 1, 2, 3 and minus m = 2, 3.
const std::vector<KnownIntegral>& known_integrals();

}  // namespace lemniscate
