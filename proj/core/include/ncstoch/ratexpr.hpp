#ifndef NCSTOCH_RATEXPR_HPP
#define NCSTOCH_RATEXPR_HPP

#include <memory>
#include <string>
#include <vector>

#include "ncstoch/rational.hpp"

namespace ncstoch {

/// Immutable AST of *-rational / rational expressions over an alphabet:
/// atoms, scalars, n-ary sums and products, star and inverse. Sums and
/// products are kept flattened; scalar factors of a product are merged into
/// a single leading coefficient (scalars are central in every backend).
class Expr {
public:
    enum class Kind { Atom, Scalar, Sum, Product, Star, Inverse };

    Expr() : Expr(scalar(Rational(0))) {}

    static Expr atom(std::string name);
    static Expr scalar(Rational value);
    static Expr sum(std::vector<Expr> children);
    static Expr product(std::vector<Expr> children);
    static Expr star(Expr child);
    static Expr inv(Expr child);
    static Expr negate(const Expr& e);
    /// x - y as sum(x, negate(y)).
    static Expr minus(const Expr& x, const Expr& y) { return sum({x, negate(y)}); }

    Kind kind() const;
    const std::string& atom_name() const;
    const Rational& scalar_value() const;
    const std::vector<Expr>& children() const;
    const Expr& child() const; ///< Star/Inverse

    bool is_scalar(const Rational& v) const;
    bool is_zero() const { return is_scalar(Rational(0)); }
    bool is_one() const { return is_scalar(Rational(1)); }

    /// Collects the distinct atom names of the tree (sorted).
    std::vector<std::string> atoms() const;

    friend bool operator==(const Expr& a, const Expr& b);
    friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

    /// Rendering that reparses to an equal AST.
    std::string str() const;

private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Parses the grammar
///   expr   := ('-')? term (('+'|'-') term)*
///   term   := factor factor*
///   factor := base ('^*' | '^-1')*
///   base   := letter | rational | '(' expr ')'
///   letter := [a-z][a-zA-Z0-9_]*
/// Juxtaposition is product. Throws SyntaxError with a position.
Expr parse(const std::string& text);

/// Rewrites every Star(x) into Inverse(1 - x); evaluation-equivalent in
/// every backend.
Expr star_free(const Expr& e);

/// The derivation with lambda(atom) = atom and lambda(scalar) = 0, extended
/// by Leibniz, lambda(x^-1) = -x^-1 lambda(x) x^-1 and
/// lambda(x^*) = x^* lambda(x) x^*.
Expr lambda_expr(const Expr& e);

} // namespace ncstoch

#endif
