#ifndef NCSTOCH_ERRORS_HPP
#define NCSTOCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ncstoch {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact_arith
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};
struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& what = "matrix is singular") : Error(what) {}
};
struct NotEvaluableAtOne : Error {
    explicit NotEvaluableAtOne(const std::string& what = "not evaluable at t = 1") : Error(what) {}
};

// free_series
struct DegreeMismatch : Error {
    explicit DegreeMismatch(const std::string& what) : Error(what) {}
};
struct NonzeroConstantTerm : Error {
    explicit NonzeroConstantTerm(const std::string& what = "star of a series with nonzero constant term")
        : Error(what) {}
};
struct ZeroConstantTerm : Error {
    explicit ZeroConstantTerm(const std::string& what = "inverse of a series with zero constant term")
        : Error(what) {}
};
struct DegreeRaisingSubstitution : Error {
    explicit DegreeRaisingSubstitution(const std::string& what) : Error(what) {}
};
struct UnknownLetter : Error {
    explicit UnknownLetter(const std::string& name) : Error("unknown letter: " + name) {}
};

// ratexpr
struct SyntaxError : Error {
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), pos(position) {}
    std::size_t pos;
};
struct SingularInversion : Error {
    explicit SingularInversion(const std::string& subexpr)
        : Error("singular inversion in subexpression: " + subexpr) {}
};
struct DivergentStar : Error {
    explicit DivergentStar(const std::string& subexpr)
        : Error("star does not converge (value >= 1) in subexpression: " + subexpr) {}
};
struct NotPositive : Error {
    explicit NotPositive(const std::string& what) : Error(what) {}
};

// automata
struct MonoidTooLarge : Error {
    explicit MonoidTooLarge(std::size_t cap)
        : Error("monoid closure exceeds element cap " + std::to_string(cap)) {}
};
struct BadAutomatonFile : Error {
    explicit BadAutomatonFile(const std::string& what) : Error(what) {}
};

// commutative
struct TooLarge : Error {
    explicit TooLarge(const std::string& what) : Error(what) {}
};

// quasidet
struct NotDefined : Error {
    explicit NotDefined(const std::string& what = "quasideterminant is not defined") : Error(what) {}
};

} // namespace ncstoch

#endif
