#ifndef NCSTOCH_RATFUN_HPP
#define NCSTOCH_RATFUN_HPP

#include <ostream>
#include <string>

#include "ncstoch/poly.hpp"

namespace ncstoch {

/// Univariate rational function over Q in t, kept reduced: gcd(num, den) = 1
/// and den monic.
class RatFun {
public:
    RatFun() : num_(), den_(Rational(1)) {}
    RatFun(const Rational& c) : num_(c), den_(Rational(1)) {} // NOLINT: implicit
    RatFun(Poly num, Poly den);

    static RatFun t() { return RatFun(Poly::t(), Poly(Rational(1))); }
    static RatFun one_minus_t() { return RatFun(Poly::one_minus_t(), Poly(Rational(1))); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    RatFun inverse() const;

    /// Evaluate at a point where the denominator does not vanish.
    Rational eval(const Rational& x) const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const RatFun& f) { return os << f.str(); }

private:
    Poly num_, den_;
};

/// Result of evaluating a rational function at t = 1 via the normal form
/// f = (1-t)^n * Q / R with Q(1), R(1) != 0.
struct OneEval {
    int vanishing_order = 0; ///< n above; negative means a pole at t = 1
    Rational value;          ///< Q(1)/R(1) if n = 0, zero if n >= 1
};

/// Throws NotEvaluableAtOne when the order is negative.
OneEval eval_at_one(const RatFun& f);

} // namespace ncstoch

#endif
