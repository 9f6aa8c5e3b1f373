#include "lemniscate/known_values.hpp"

#include <initializer_list>

namespace lemniscate {

namespace {

// One term num/den * Gamma^a * pi^k.
struct Row {
    long num, den;
    int gamma_exp, pi_exp;
};

GammaPiExpr build(std::initializer_list<Row> rows) {
    GammaPiExpr e;
    for (const Row& r : rows) e += GammaPiExpr::monomial(r.num, r.den, r.gamma_exp, r.pi_exp);
    return e;
}

constexpr long P2(int k) { return 1L << k; }

}  // namespace

const std::vector<KnownSum>& known_sums() {
    using F = ClosedFamily;
    static const std::vector<KnownSum> table = {
        {F::Cosh3Minus, 1, build({{-3, P2(4), 4, -5}, {1, P2(10), 12, -9}})},
        {F::Cosh3Plus, 1, build({{-3, P2(9), 12, -9}, {5, P2(8), 12, -10}})},
        {F::Cosh3Minus, 2, build({{63, P2(8), 12, -11}, {-13, P2(14), 20, -15}})},
        {F::Cosh3Plus, 2, build({{189, P2(13), 20, -15}, {-297, P2(12), 20, -16}})},
        {F::Cosh4, 1, build({{-1, P2(2), 4, -6}, {-1, 3 * P2(9), 12, -9}, {1, P2(8), 12, -10}})},
        {F::Cosh4, 2, build({{21, P2(5), 12, -12}, {-13, P2(11), 20, -16}, {11, P2(13), 20, -15}})},
        {F::Cosh5, 1,
         build({{5, P2(4), 4, -7},
                {-5, P2(9), 12, -11},
                {25, 3 * P2(9), 12, -10},
                {-9, P2(11), 12, -9},
                {1, 3 * P2(16), 20, -15}})},
        {F::Cosh5, 2,
         build({{-189, P2(7), 12, -13},
                {117, P2(12), 20, -17},
                {-495, P2(13), 20, -16},
                {567, P2(15), 20, -15},
                {-1, P2(16), 28, -21}})},
        {F::Sinh3Minus, 2, build({{-5, P2(10), 8, -8}, {1, P2(16), 16, -12}})},
        {F::Sinh3Plus, 2, build({{7, P2(15), 16, -13}, {-9, P2(17), 16, -12}})},
        {F::Sinh3Minus, 3, build({{81, P2(16), 16, -14}, {-17, P2(22), 24, -18}})},
        {F::Sinh3Plus, 3, build({{-297, P2(21), 24, -19}, {189, P2(22), 24, -18}})},
        {F::Sinh4, 2, build({{3, P2(16), 16, -13}, {-1, 3 * P2(15), 16, -12}, {-5, P2(10), 8, -9}})},
        {F::Sinh4, 3, build({{135, P2(16), 16, -15}, {-85, P2(22), 24, -19}, {9, P2(21), 24, -18}})},
        {F::Sinh5, 2,
         build({{-35, P2(13), 8, -10},
                {21, P2(18), 16, -14},
                {-35, 3 * P2(16), 16, -13},
                {27, P2(19), 16, -12},
                {-5, 3 * P2(25), 24, -18}})},
        {F::Sinh5, 3,
         build({{1485, P2(19), 16, -16},
                {-935, P2(24), 24, -20},
                {495, P2(22), 24, -19},
                {-567, P2(24), 24, -18},
                {65, P2(31), 32, -24}})},
    };
    return table;
}

const std::vector<KnownIntegral>& known_integrals() {
    using S = BerndtSign;
    static const std::vector<KnownIntegral> table = {
        {S::Plus, 1,
         build({{15, P2(8), 4, -1},
                {5, P2(13), 12, -5},
                {-5, P2(13), 12, -4},
                {3, P2(15), 12, -3},
                {1, P2(20), 20, -9}})},
        {S::Plus, 2,
         build({{567, P2(13), 12, -3},
                {117, P2(18), 20, -7},
                {-297, P2(19), 20, -6},
                {189, P2(21), 20, -5},
                {3, P2(22), 28, -11}})},
        {S::Plus, 3,
         build({{405405, P2(20), 20, -5},
                {84591, P2(25), 28, -9},
                {-107757, P2(25), 28, -8},
                {68607, P2(27), 28, -7},
                {17679, P2(32), 36, -13}})},
        {S::Minus, 2,
         build({{-105, P2(11), 8, -2},
                {-21, P2(16), 16, -6},
                {7, P2(14), 16, -5},
                {-9, P2(17), 16, -4},
                {-5, P2(23), 24, -10}})},
        {S::Minus, 3,
         build({{-4455, P2(15), 16, -4},
                {-935, P2(20), 24, -8},
                {297, P2(18), 24, -7},
                {-189, P2(20), 24, -6},
                {-195, P2(27), 32, -12}})},
    };
    return table;
}

}  // namespace lemniscate
