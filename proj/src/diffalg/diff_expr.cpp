#include "lemniscate/diff_expr.hpp"

#include "lemniscate/error.hpp"

#include <sstream>

namespace lemniscate {

Poly x_one_minus_x() { return Poly({BigRational(0), BigRational(1), BigRational(-1)}); }

int ZMonomial::top_order() const {
    for (int k = kDerivativeSlots; k >= 1; --k) {
        if (d[static_cast<std::size_t>(k - 1)] != 0) return k;
    }
    return 0;
}

ZMonomial operator*(const ZMonomial& a, const ZMonomial& b) {
    ZMonomial r = a;
    r.z += b.z;
    for (std::size_t i = 0; i < r.d.size(); ++i) r.d[i] += b.d[i];
    return r;
}

DiffExpr::DiffExpr(int half_power, int max_order) : half_power_(half_power), max_order_(max_order) {
    if (max_order < 0 || max_order > kDerivativeSlots) {
        throw DomainError("DiffExpr: derivative order cap must lie in [0, " + std::to_string(kDerivativeSlots) + "]");
    }
}

DiffExpr DiffExpr::constant(const RationalFunction& c, int half_power) {
    DiffExpr e(half_power);
    e.add_term(ZMonomial{}, c);
    return e;
}

DiffExpr DiffExpr::z_derivative(int order, int max_order) {
    if (order < 0 || order > max_order) throw PipelineError("DiffExpr: z derivative of order " + std::to_string(order) + " exceeds cap");
    DiffExpr e(0, max_order);
    ZMonomial m;
    m.exponent(order) = 1;
    e.add_term(m, RationalFunction(1));
    return e;
}

DiffExpr DiffExpr::term(const RationalFunction& c, const ZMonomial& m, int half_power) {
    DiffExpr e(half_power);
    if (m.top_order() > e.max_order_) throw PipelineError("DiffExpr: monomial exceeds derivative cap");
    for (int k = 1; k <= kDerivativeSlots; ++k) {
        if (m.exponent(k) < 0) throw DomainError("DiffExpr: negative exponent on a derivative of z");
    }
    e.add_term(m, c);
    return e;
}

DiffExpr DiffExpr::prefactor(int half_power) { return constant(RationalFunction(1), half_power); }

int DiffExpr::top_order() const {
    int top = 0;
    for (const auto& [m, c] : terms_) top = std::max(top, m.top_order());
    return top;
}

void DiffExpr::add_term(const ZMonomial& m, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffExpr DiffExpr::rebased(int s) const {
    if (is_zero()) return DiffExpr(s, max_order_);
    if ((half_power_ - s) % 2 != 0) {
        throw PipelineError("DiffExpr: cannot rebase prefactor exponent " + std::to_string(half_power_) + " to " +
                            std::to_string(s) + " (parity differs)");
    }
    DiffExpr r(s, max_order_);
    const RationalFunction factor = RationalFunction(x_one_minus_x()).pow((half_power_ - s) / 2);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * factor);
    return r;
}

DiffExpr DiffExpr::with_max_order(int max_order) const {
    if (top_order() > max_order) throw PipelineError("DiffExpr: expression already exceeds requested cap");
    DiffExpr r = *this;
    r.max_order_ = max_order;
    return r;
}

void DiffExpr::check_compatible(const DiffExpr& o, const char* op) const {
    if (half_power_ != o.half_power_) {
        throw PipelineError(std::string("DiffExpr ") + op + ": prefactor exponents differ (" +
                            std::to_string(half_power_) + " vs " + std::to_string(o.half_power_) + ")");
    }
}

DiffExpr& DiffExpr::operator+=(const DiffExpr& o) {
    max_order_ = std::max(max_order_, o.max_order_);
    if (o.is_zero()) return *this;
    if (is_zero()) {
        half_power_ = o.half_power_;
    } else {
        check_compatible(o, "add");
    }
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

DiffExpr& DiffExpr::operator-=(const DiffExpr& o) { return *this += -o; }

DiffExpr& DiffExpr::operator*=(const RationalFunction& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

DiffExpr operator*(const DiffExpr& a, const DiffExpr& b) {
    DiffExpr r(a.half_power_ + b.half_power_, std::max(a.max_order_, b.max_order_));
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    }
    return r;
}

DiffExpr DiffExpr::operator-() const {
    DiffExpr r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

bool operator==(const DiffExpr& a, const DiffExpr& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if ((a.half_power_ - b.half_power_) % 2 != 0) return false;
    const int s = std::min(a.half_power_, b.half_power_);
    return a.rebased(s).terms_ == b.rebased(s).terms_;
}

DiffExpr DiffExpr::d_dx() const {
    DiffExpr r(half_power_ - 2, max_order_);
    const RationalFunction w(x_one_minus_x());
    const RationalFunction prefactor_slope =
        RationalFunction(Poly({BigRational(1), BigRational(-2)})) * RationalFunction(BigRational(half_power_, 2));
    for (const auto& [m, c] : terms_) {
        if (half_power_ != 0) r.add_term(m, prefactor_slope * c);
        r.add_term(m, w * c.derivative());
        for (int k = 0; k <= max_order_; ++k) {
            const int e = m.exponent(k);
            if (e == 0) continue;
            if (k + 1 > max_order_) {
                throw PipelineError("DiffExpr: differentiating z^(" + std::to_string(k) + ") exceeds the derivative cap " +
                                    std::to_string(max_order_));
            }
            ZMonomial n = m;
            n.exponent(k) -= 1;
            n.exponent(k + 1) += 1;
            r.add_term(n, w * c * RationalFunction(BigRational(e)));
        }
    }
    return r;
}

DiffExpr DiffExpr::d_dy() const {
    DiffExpr dx = d_dx();
    DiffExpr r(half_power_, max_order_);
    for (const auto& [m, c] : dx.terms_) {
        ZMonomial n = m;
        n.z += 2;
        r.add_term(n, -c);
    }
    return r;
}

namespace {

std::string monomial_text(const ZMonomial& m, bool latex) {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first && !latex) os << "*";
        first = false;
    };
    for (int k = 0; k <= kDerivativeSlots; ++k) {
        const int e = m.exponent(k);
        if (e == 0) continue;
        sep();
        if (latex) {
            std::string sym = k == 0 ? "z" : (k <= 2 ? "z" + std::string(static_cast<std::size_t>(k), '\'') : "z^{(" + std::to_string(k) + ")}");
            if (e == 1) {
                os << sym;
            } else if (k == 0) {
                os << "z^{" << e << "}";
            } else {
                os << "\\left(" << sym << "\\right)^{" << e << "}";
            }
        } else {
            os << (k == 0 ? std::string("z") : "z" + std::to_string(k));
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

std::string prefactor_text(int s, bool latex) {
    if (s == 0) return {};
    if (latex) {
        if (s == 1) return "\\sqrt{x(1-x)}";
        if (s % 2 == 0) return "\\left(x(1-x)\\right)^{" + std::to_string(s / 2) + "}";
        return "\\left(x(1-x)\\right)^{" + std::to_string(s) + "/2}";
    }
    if (s == 1) return "sqrt(x(1-x))";
    if (s % 2 == 0) return "(x(1-x))^" + std::to_string(s / 2);
    return "(x(1-x))^(" + std::to_string(s) + "/2)";
}

}  // namespace

std::string DiffExpr::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    const std::string pre = prefactor_text(half_power_, false);
    if (!pre.empty()) os << pre << " * (";
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        const std::string mono = monomial_text(m, false);
        if (!mono.empty()) os << "*" << mono;
    }
    if (!pre.empty()) os << ")";
    return os.str();
}

std::string DiffExpr::latex() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    const std::string pre = prefactor_text(half_power_, true);
    if (!pre.empty()) os << pre << "\\left\\{";
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const std::string mono = monomial_text(m, true);
        const std::string coeff = c.latex();
        const bool simple = c.is_polynomial() && c.num().degree() == 0;
        if (!first) os << "+";
        first = false;
        if (simple) {
            if (mono.empty()) os << coeff;
            else if (coeff == "1") os << mono;
            else if (coeff == "-1") os << "-" << mono;
            else os << coeff << mono;
        } else {
            os << "\\left(" << coeff << "\\right)" << mono;
        }
    }
    if (!pre.empty()) os << "\\right\\}";
    std::string out = os.str();
    // "+-" from negative leading coefficients reads as "-".
    for (std::size_t pos; (pos = out.find("+-")) != std::string::npos;) out.replace(pos, 2, "-");
    return out;
}

}  // namespace lemniscate
