#ifndef NCSTOCH_POLY_HPP
#define NCSTOCH_POLY_HPP

#include <ostream>
#include <string>
#include <vector>

#include "ncstoch/rational.hpp"

namespace ncstoch {

/// Univariate polynomial over Q in the central variable t.
/// Coefficients are indexed by degree; no trailing zero coefficients are
/// stored, so the zero polynomial has an empty coefficient vector.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c) { if (!c.is_zero()) coeffs_ = {c}; } // NOLINT: implicit
    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly t() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }
    static Poly one_minus_t() { return Poly(std::vector<Rational>{Rational(1), Rational(-1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& leading() const { return coeffs_.back(); }
    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, const Poly& p);
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Euclidean division; throws DivisionByZero when b = 0.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    /// Monic gcd.
    static Poly gcd(Poly a, Poly b);

    Rational eval(const Rational& x) const;

    /// Order of vanishing at t = 1, i.e. the largest k with (1-t)^k dividing
    /// this polynomial, together with the cofactor: *this = (1-t)^k * rest,
    /// rest(1) != 0. The zero polynomial is rejected.
    std::pair<std::size_t, Poly> one_order() const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

} // namespace ncstoch

#endif
