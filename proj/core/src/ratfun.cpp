#include "ncstoch/ratfun.hpp"

#include "ncstoch/errors.hpp"

namespace ncstoch {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    const Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::divmod(num_, g).first;
        den_ = Poly::divmod(den_, g).first;
    }
    const Rational lead_inv = den_.leading().inverse();
    num_ = lead_inv * num_;
    den_ = lead_inv * den_;
}

RatFun RatFun::operator-() const {
    RatFun r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw DivisionByZero();
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return RatFun(den_, num_);
}

Rational RatFun::eval(const Rational& x) const {
    const Rational d = den_.eval(x);
    if (d.is_zero()) throw DivisionByZero();
    return num_.eval(x) / d;
}

std::string RatFun::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

OneEval eval_at_one(const RatFun& f) {
    if (f.is_zero()) return OneEval{0, Rational(0)};
    const auto [num_ord, num_rest] = f.num().one_order();
    const auto [den_ord, den_rest] = f.den().one_order();
    // The fraction is reduced, so at most one of the orders is positive.
    const int n = static_cast<int>(num_ord) - static_cast<int>(den_ord);
    if (n < 0)
        throw NotEvaluableAtOne("pole of order " + std::to_string(-n) + " at t = 1: " + f.str());
    OneEval r;
    r.vanishing_order = n;
    r.value = n == 0 ? num_rest.eval(Rational(1)) / den_rest.eval(Rational(1)) : Rational(0);
    return r;
}

} // namespace ncstoch
