#include "lemniscate/families.hpp"

#include "lemniscate/error.hpp"

namespace lemniscate {

std::string_view to_string(CoshFamily f) {
    switch (f) {
        case CoshFamily::C1: return "C1";
        case CoshFamily::C3: return "C3";
        case CoshFamily::S4: return "S4";
        case CoshFamily::C5: return "C5";
    }
    return "?";
}

std::string_view to_string(SinhFamily f) {
    switch (f) {
        case SinhFamily::B1: return "B1";
        case SinhFamily::B3: return "B3";
        case SinhFamily::K4: return "K4";
        case SinhFamily::B5: return "B5";
    }
    return "?";
}

int exponent_of(CoshFamily f, int p) {
    switch (f) {
        case CoshFamily::C1: return 2 * p - 1;
        case CoshFamily::C3: return 2 * p + 1;
        case CoshFamily::S4: return 2 * p + 2;
        case CoshFamily::C5: return 2 * p + 3;
    }
    return 0;
}

int exponent_of(SinhFamily f, int p) {
    switch (f) {
        case SinhFamily::B1: return 2 * p + 1;
        case SinhFamily::B3: return 2 * p + 3;
        case SinhFamily::K4: return 2 * p + 4;
        case SinhFamily::B5: return 2 * p + 5;
    }
    return 0;
}

int hyperbolic_power(CoshFamily f) {
    switch (f) {
        case CoshFamily::C1: return 1;
        case CoshFamily::C3: return 3;
        case CoshFamily::S4: return 4;
        case CoshFamily::C5: return 5;
    }
    return 0;
}

int hyperbolic_power(SinhFamily f) {
    switch (f) {
        case SinhFamily::B1: return 1;
        case SinhFamily::B3: return 3;
        case SinhFamily::K4: return 4;
        case SinhFamily::B5: return 5;
    }
    return 0;
}

namespace {

void require_index(int p) {
    if (p < 1) throw DomainError("family index must be >= 1, got " + std::to_string(p));
}

RationalFunction q(long num, long den = 1) { return RationalFunction(BigRational(num, den)); }

ZMonomial z_power(int e) {
    ZMonomial m;
    m.z = e;
    return m;
}

// C1(p) = (-1)^p/2 z^{2p} sqrt(x(1-x)) p_{2p-1}(x).
DiffExpr cosh_base(int p, const SeriesTables& t) {
    require_index(p);
    const RationalFunction c = RationalFunction(t.p(2 * p - 1)) * q(p % 2 == 0 ? 1 : -1, 2);
    return DiffExpr::term(c, z_power(2 * p), 1);
}

// B1(p) = (2p)!/2^{2p+2} z^{2p+2} x(x-1) R_{2p}(x).
DiffExpr sinh_base(int p, const SeriesTables& t) {
    require_index(p);
    const BigRational scale = BigRational::factorial(static_cast<unsigned>(2 * p)) * BigRational::pow2(-(2 * p + 2));
    const RationalFunction c = RationalFunction(-(x_one_minus_x() * t.R(2 * p))) * RationalFunction(scale);
    return DiffExpr::term(c, z_power(2 * p + 2), 0);
}

}  // namespace

DiffExpr cosh_square_intermediate(int p, const SeriesTables& t) { return cosh_base(p, t).d_dy() * q(-2); }

DiffExpr sinh_square_intermediate(int p, const SeriesTables& t) { return -sinh_base(p, t).d_dy(); }

DiffExpr cosh_family_expr(CoshFamily f, int p, const SeriesTables& t) {
    require_index(p);
    switch (f) {
        case CoshFamily::C1: return cosh_base(p, t);
        case CoshFamily::C3: return cosh_square_intermediate(p, t).d_dy() + cosh_base(p + 1, t) * q(1, 2);
        case CoshFamily::S4: return cosh_family_expr(CoshFamily::C3, p, t).d_dy() * q(-2, 3);
        case CoshFamily::C5:
            return cosh_family_expr(CoshFamily::S4, p, t).d_dy() * q(1, 2) +
                   cosh_family_expr(CoshFamily::C3, p + 1, t) * q(3, 4);
    }
    throw DomainError("cosh_family_expr: bad family");
}

DiffExpr sinh_family_expr(SinhFamily f, int p, const SeriesTables& t) {
    require_index(p);
    switch (f) {
        case SinhFamily::B1: return sinh_base(p, t);
        case SinhFamily::B3: return sinh_square_intermediate(p, t).d_dy() * q(-1, 2) - sinh_base(p + 1, t) * q(1, 2);
        case SinhFamily::K4: return sinh_family_expr(SinhFamily::B3, p, t).d_dy() * q(-1, 3);
        case SinhFamily::B5:
            return sinh_family_expr(SinhFamily::K4, p, t).d_dy() * q(-1, 4) -
                   sinh_family_expr(SinhFamily::B3, p + 1, t) * q(3, 4);
    }
    throw DomainError("sinh_family_expr: bad family");
}

DiffExpr nome_exponent_derivative() {
    const RationalFunction c = RationalFunction(-1) / RationalFunction(x_one_minus_x());
    return DiffExpr::term(c, z_power(-2), 0);
}

namespace {

// (dx/dy)^k = (1/y')^k with dx/dy = -x(1-x) z^2, for k >= 0.
DiffExpr dx_dy_power(int k) {
    const RationalFunction c = RationalFunction(-x_one_minus_x()).pow(k);
    return DiffExpr::term(c, z_power(2 * k), 0);
}

}  // namespace

DiffExpr cosh3_via_x_derivatives(int p, const SeriesTables& t) {
    require_index(p);
    // Summed over n >= 0 the base series at m = p-1 is (-1)^m/2 z^{2m+2} sqrt(x(1-x)) p_{2m+1},
    // i.e. -C1(p); the n >= 0 form of C3(p) is -C3(p).
    const DiffExpr base = -cosh_base(p, t);
    const DiffExpr next = -cosh_base(p + 1, t);
    const DiffExpr y1 = nome_exponent_derivative();
    const DiffExpr y2 = y1.d_dx();
    const DiffExpr inv_y1_cubed = dx_dy_power(3);
    const DiffExpr inv_y1_squared = dx_dy_power(2);
    DiffExpr forward = next * q(1, 2);
    forward += (y2 * inv_y1_cubed * base.d_dx() * q(2)).rebased(1);
    forward -= (inv_y1_squared * base.d_dx().d_dx() * q(2)).rebased(1);
    return -forward;
}

DiffExpr sinh3_via_x_derivatives(int p, const SeriesTables& t) {
    require_index(p);
    const DiffExpr base = sinh_base(p, t);
    const DiffExpr square_series = -(dx_dy_power(1) * base.d_dx()).rebased(0);
    const DiffExpr y2 = nome_exponent_derivative().d_dx();
    DiffExpr out = (dx_dy_power(2) * base.d_dx().d_dx()).rebased(0) * q(1, 2);
    out -= sinh_base(p + 1, t) * q(1, 2);
    out += (y2 * dx_dy_power(2) * square_series).rebased(0) * q(1, 2);
    return out;
}

}  // namespace lemniscate
