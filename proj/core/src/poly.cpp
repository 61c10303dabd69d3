#include "ncstoch/poly.hpp"

#include <sstream>

#include "ncstoch/errors.hpp"

namespace ncstoch {

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(c));
}

Poly operator*(const Rational& s, const Poly& p) {
    if (s.is_zero()) return Poly();
    Poly r(p);
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero();
    Poly rem(a);
    if (rem.degree() < b.degree()) return {Poly(), rem};
    std::vector<Rational> q(rem.coeffs_.size() - b.coeffs_.size() + 1);
    const Rational lead_inv = b.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const std::size_t shift = rem.coeffs_.size() - b.coeffs_.size();
        const Rational f = rem.leading() * lead_inv;
        q[shift] = f;
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
            rem.coeffs_[shift + i] -= f * b.coeffs_[i];
        rem.trim();
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.leading().inverse() * a; // monic
}

Rational Poly::eval(const Rational& x) const {
    Rational r(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

std::pair<std::size_t, Poly> Poly::one_order() const {
    if (is_zero()) throw Error("one_order: zero polynomial");
    std::size_t order = 0;
    Poly rest(*this);
    while (rest.eval(Rational(1)).is_zero()) {
        auto [q, r] = divmod(rest, one_minus_t());
        // r must be zero because t = 1 is a root
        rest = std::move(q);
        ++order;
    }
    return {order, rest};
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        const Rational a = c.abs();
        if (k == 0) {
            os << a;
        } else {
            if (!a.is_one()) os << a << "*";
            os << "t";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

} // namespace ncstoch
