#pragma once

#include "lemniscate/diff_expr.hpp"
#include "lemniscate/series.hpp"

#include <string_view>

namespace lemniscate {

/// Hyperbolic-cosine families, all summed over n >= 1 with sign (-1)^n and
/// half-odd arguments t = (2n-1)/2:
///   C1(p) = sum (-1)^n (2n-1)^{2p-1} / cosh(t y)
///   C3(p) = sum (-1)^n (2n-1)^{2p+1} / cosh^3(t y)
///   S4(p) = sum (-1)^n (2n-1)^{2p+2} sinh(t y) / cosh^4(t y)
///   C5(p) = sum (-1)^n (2n-1)^{2p+3} / cosh^5(t y)
enum class CoshFamily { C1, C3, S4, C5 };

/// Hyperbolic-sine families, summed over n >= 1 with sign (-1)^n:
///   B1(p) = sum (-1)^n n^{2p+1} / sinh(n y)
///   B3(p) = sum (-1)^n n^{2p+3} / sinh^3(n y)
///   K4(p) = sum (-1)^n n^{2p+4} cosh(n y) / sinh^4(n y)
///   B5(p) = sum (-1)^n n^{2p+5} / sinh^5(n y)
enum class SinhFamily { B1, B3, K4, B5 };

std::string_view to_string(CoshFamily f);
std::string_view to_string(SinhFamily f);

/// Power of (2n-1) or n carried by the family at index p.
int exponent_of(CoshFamily f, int p);
int exponent_of(SinhFamily f, int p);
/// Power of cosh or sinh in the denominator (1, 3, 4 or 5).
int hyperbolic_power(CoshFamily f);
int hyperbolic_power(SinhFamily f);

/// Symbolic value of the series as a function of x = k^2, built from the
/// sd (cosh) or sn^2 (sinh) coefficient polynomials by repeated d/dy.
/// Requires p >= 1 and tables long enough; cosh results carry prefactor
/// exponent 1, sinh results exponent 0.
DiffExpr cosh_family_expr(CoshFamily f, int p, const SeriesTables& tables);
DiffExpr sinh_family_expr(SinhFamily f, int p, const SeriesTables& tables);

/// sum (-1)^n (2n-1)^{2p} sinh(t y)/cosh^2(t y) = -2 d/dy C1(p).
DiffExpr cosh_square_intermediate(int p, const SeriesTables& tables);
/// sum (-1)^n n^{2p+2} cosh(n y)/sinh^2(n y) = -d/dy B1(p).
DiffExpr sinh_square_intermediate(int p, const SeriesTables& tables);

/// C3(p) assembled from the x-derivative identity: base series at the next
/// index, plus y''/(y')^3 times the first x-derivative and 1/(y')^2 times the
/// second x-derivative of the base series. Independent of the d/dy route.
DiffExpr cosh3_via_x_derivatives(int p, const SeriesTables& tables);
/// B3(p) from (dx/dy)^2 d^2/dx^2 B1(p), B1(p+1) and y''(dx/dy)^2 times the
/// cosh/sinh^2 series written as -(dx/dy) d/dx B1(p).
DiffExpr sinh3_via_x_derivatives(int p, const SeriesTables& tables);

/// y'(x) = -1/(x(1-x) z^2), the x-derivative of the nome exponent.
DiffExpr nome_exponent_derivative();

}  // namespace lemniscate
