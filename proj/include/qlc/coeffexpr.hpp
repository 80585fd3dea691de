#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "qlc/qpoly.hpp"

namespace qlc {

/// Arithmetic expression over the variables n, k, q. Evaluating at integer
/// (n, k) yields a QPoly in q. ASTs are immutable and stay faithful to the
/// parsed source; constants are folded at eval time only.
///
/// Grammar (whitespace insignificant, no implicit multiplication):
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' UINT)?
///   atom   := UINT | 'n' | 'k' | 'q' | '-' atom | '(' expr ')'
class CoeffExpr {
  public:
    enum class Kind { Literal, Variable, Add, Sub, Mul, Pow, Negate };
    enum class Var { N, K, Q };

    struct Node;
    using NodePtr = std::shared_ptr<const Node>;
    struct Node {
        Kind kind;
        Int literal;            // Literal
        Var var = Var::Q;       // Variable
        NodePtr lhs, rhs;       // Add/Sub/Mul use both; Pow/Negate use lhs
        unsigned long exponent = 0;  // Pow
    };

    /// Default expression is the literal 0.
    CoeffExpr();

    /// Parses per the grammar above; throws ParseError with the byte offset
    /// and the set of tokens that would have been accepted.
    static CoeffExpr parse(std::string_view src);

    // Programmatic builders (used by tests and recurrence fuzzers).
    static CoeffExpr literal(Int v);
    static CoeffExpr variable(Var v);
    static CoeffExpr add(CoeffExpr a, CoeffExpr b);
    static CoeffExpr sub(CoeffExpr a, CoeffExpr b);
    static CoeffExpr mul(CoeffExpr a, CoeffExpr b);
    static CoeffExpr pow(CoeffExpr base, unsigned long e);
    static CoeffExpr negate(CoeffExpr a);

    /// Substitutes integers for n and k and folds to a QPoly in q. Negative
    /// intermediate coefficients are permitted; callers that need
    /// nonnegativity check the result.
    QPoly eval(long n, long k) const;

    /// Canonical printer; parse(render()) reproduces the same AST.
    std::string render() const;

    /// True when the expression mentions n or k.
    bool depends_on_nk() const;

    /// Structural equality.
    bool operator==(const CoeffExpr& o) const;

    const NodePtr& root() const { return root_; }

  private:
    explicit CoeffExpr(NodePtr root) : root_(std::move(root)) {}
    NodePtr root_;
};

}  // namespace qlc
