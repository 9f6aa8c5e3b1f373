#include "lemniscate/rational_function.hpp"

#include "lemniscate/error.hpp"

namespace lemniscate {

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("RationalFunction: zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    if (den_.degree() > 0) {
        const Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
    }
    const BigRational lead = den_.leading();
    if (lead != BigRational(1)) {
        const BigRational inv = BigRational(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (is_polynomial() && o.is_polynomial()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ = num_ * o.num_;
    if (!(is_polynomial() && o.is_polynomial())) {
        den_ = den_ * o.den_;
        normalize();
    } else if (num_.is_zero()) {
        den_ = Poly::constant(1);
    }
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw DomainError("RationalFunction: division by zero");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::pow(int e) const {
    if (e < 0) return RationalFunction(Poly::constant(1)) / pow(-e);
    RationalFunction r;
    r.num_ = num_.pow(static_cast<unsigned>(e));
    r.den_ = den_.pow(static_cast<unsigned>(e));
    return r;
}

RationalFunction RationalFunction::derivative() const {
    if (is_polynomial()) return RationalFunction(num_.derivative() * (BigRational(1) / den_.leading()));
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

BigRational RationalFunction::operator()(const BigRational& x0) const {
    const BigRational d = den_(x0);
    if (d.is_zero()) throw DomainError("RationalFunction: denominator vanishes at " + x0.str());
    return num_(x0) / d;
}

std::string RationalFunction::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::string RationalFunction::latex() const {
    if (is_polynomial()) return num_.latex();
    return "\\frac{" + num_.latex() + "}{" + den_.latex() + "}";
}

}  // namespace lemniscate
