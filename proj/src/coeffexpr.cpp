#include "qlc/coeffexpr.hpp"

#include <cctype>

#include "qlc/errors.hpp"

namespace qlc {

namespace {

using Kind = CoeffExpr::Kind;
using Var = CoeffExpr::Var;
using NodePtr = CoeffExpr::NodePtr;

NodePtr make_literal(Int v) {
    auto n = std::make_shared<CoeffExpr::Node>();
    n->kind = Kind::Literal;
    n->literal = std::move(v);
    return n;
}

NodePtr make_variable(Var v) {
    auto n = std::make_shared<CoeffExpr::Node>();
    n->kind = Kind::Variable;
    n->var = v;
    return n;
}

NodePtr make_binary(Kind k, NodePtr a, NodePtr b) {
    auto n = std::make_shared<CoeffExpr::Node>();
    n->kind = k;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}

NodePtr make_pow(NodePtr base, unsigned long e) {
    auto n = std::make_shared<CoeffExpr::Node>();
    n->kind = Kind::Pow;
    n->lhs = std::move(base);
    n->exponent = e;
    return n;
}

NodePtr make_negate(NodePtr a) {
    auto n = std::make_shared<CoeffExpr::Node>();
    n->kind = Kind::Negate;
    n->lhs = std::move(a);
    return n;
}

class Parser {
  public:
    explicit Parser(std::string_view src) : src_(src) {}

    NodePtr run() {
        NodePtr e = expr();
        skip_ws();
        if (pos_ != src_.size())
            fail({"'+'", "'-'", "'*'", "'^'", "end of input"}, "trailing input");
        return e;
    }

  private:
    std::string_view src_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(std::vector<std::string> expected, const std::string& what) {
        throw ParseError(pos_, std::move(expected),
                         "syntax error at byte " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    Int read_uint() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ == start) fail({"unsigned integer"}, "expected an unsigned integer");
        return Int(std::string(src_.substr(start, pos_ - start)), 10);
    }

    NodePtr expr() {
        NodePtr e = term();
        for (;;) {
            if (accept('+'))
                e = make_binary(Kind::Add, e, term());
            else if (accept('-'))
                e = make_binary(Kind::Sub, e, term());
            else
                return e;
        }
    }

    NodePtr term() {
        NodePtr e = factor();
        while (accept('*')) e = make_binary(Kind::Mul, e, factor());
        return e;
    }

    NodePtr factor() {
        NodePtr base = atom();
        if (accept('^')) {
            Int e = read_uint();
            if (!e.fits_ulong_p()) fail({"small exponent"}, "exponent too large");
            return make_pow(base, e.get_ui());
        }
        return base;
    }

    NodePtr atom() {
        skip_ws();
        const char c = peek();
        if (c == '-') {
            ++pos_;
            return make_negate(atom());
        }
        if (c == '(') {
            ++pos_;
            NodePtr e = expr();
            if (!accept(')')) fail({"')'"}, "expected closing parenthesis");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return make_literal(read_uint());
        if (c == 'n' || c == 'k' || c == 'q') {
            ++pos_;
            return make_variable(c == 'n' ? Var::N : (c == 'k' ? Var::K : Var::Q));
        }
        fail({"unsigned integer", "'n'", "'k'", "'q'", "'-'", "'('"}, "expected an atom");
    }
};

QPoly eval_node(const CoeffExpr::Node& nd, long n, long k) {
    switch (nd.kind) {
        case Kind::Literal:
            return QPoly(nd.literal);
        case Kind::Variable:
            switch (nd.var) {
                case Var::N: return QPoly(n);
                case Var::K: return QPoly(k);
                case Var::Q: return QPoly::q();
            }
            break;
        case Kind::Add:
            return eval_node(*nd.lhs, n, k) + eval_node(*nd.rhs, n, k);
        case Kind::Sub:
            return eval_node(*nd.lhs, n, k) - eval_node(*nd.rhs, n, k);
        case Kind::Mul:
            return eval_node(*nd.lhs, n, k) * eval_node(*nd.rhs, n, k);
        case Kind::Pow:
            return eval_node(*nd.lhs, n, k).pow(nd.exponent);
        case Kind::Negate:
            return -eval_node(*nd.lhs, n, k);
    }
    return QPoly{};
}

// Rendering keeps the grammar's shape: '+'/'-' at expr level, '*' at term
// level, '^' on atoms. Right operands of +,- and operands of * that are
// themselves sums get parenthesized; so do non-atom bases of ^ and -.
bool is_atom_like(const CoeffExpr::Node& nd) {
    return nd.kind == Kind::Literal || nd.kind == Kind::Variable || nd.kind == Kind::Negate;
}

std::string render_node(const CoeffExpr::Node& nd);

std::string render_child(const CoeffExpr::Node& child, bool need_atom, bool allow_mul) {
    bool parens;
    if (need_atom) {
        parens = !is_atom_like(child);
    } else {
        const bool is_sum = child.kind == Kind::Add || child.kind == Kind::Sub;
        parens = is_sum || (child.kind == Kind::Mul && !allow_mul);
    }
    const std::string s = render_node(child);
    return parens ? "(" + s + ")" : s;
}

std::string render_node(const CoeffExpr::Node& nd) {
    switch (nd.kind) {
        case Kind::Literal:
            return nd.literal.get_str();
        case Kind::Variable:
            switch (nd.var) {
                case Var::N: return "n";
                case Var::K: return "k";
                case Var::Q: return "q";
            }
            break;
        case Kind::Add:
            return render_node(*nd.lhs) + "+" + render_child(*nd.rhs, false, true);
        case Kind::Sub:
            return render_node(*nd.lhs) + "-" + render_child(*nd.rhs, false, true);
        case Kind::Mul:
            return render_child(*nd.lhs, false, true) + "*" + render_child(*nd.rhs, false, false);
        case Kind::Pow:
            return render_child(*nd.lhs, true, false) + "^" + std::to_string(nd.exponent);
        case Kind::Negate: {
            const auto& child = *nd.lhs;
            if (is_atom_like(child)) return "-" + render_node(child);
            return "-(" + render_node(child) + ")";
        }
    }
    return "";
}

bool nodes_equal(const CoeffExpr::Node& a, const CoeffExpr::Node& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Kind::Literal: return a.literal == b.literal;
        case Kind::Variable: return a.var == b.var;
        case Kind::Add:
        case Kind::Sub:
        case Kind::Mul: return nodes_equal(*a.lhs, *b.lhs) && nodes_equal(*a.rhs, *b.rhs);
        case Kind::Pow: return a.exponent == b.exponent && nodes_equal(*a.lhs, *b.lhs);
        case Kind::Negate: return nodes_equal(*a.lhs, *b.lhs);
    }
    return false;
}

bool node_depends_on_nk(const CoeffExpr::Node& nd) {
    switch (nd.kind) {
        case Kind::Literal: return false;
        case Kind::Variable: return nd.var != Var::Q;
        case Kind::Add:
        case Kind::Sub:
        case Kind::Mul: return node_depends_on_nk(*nd.lhs) || node_depends_on_nk(*nd.rhs);
        case Kind::Pow:
        case Kind::Negate: return node_depends_on_nk(*nd.lhs);
    }
    return false;
}

}  // namespace

CoeffExpr::CoeffExpr() : root_(make_literal(Int(0))) {}

CoeffExpr CoeffExpr::parse(std::string_view src) {
    return CoeffExpr(Parser(src).run());
}

CoeffExpr CoeffExpr::literal(Int v) {
    bool neg = v < 0;
    NodePtr lit = make_literal(neg ? Int(-v) : std::move(v));
    return CoeffExpr(neg ? make_negate(std::move(lit)) : std::move(lit));
}

CoeffExpr CoeffExpr::variable(Var v) {
    return CoeffExpr(make_variable(v));
}

CoeffExpr CoeffExpr::add(CoeffExpr a, CoeffExpr b) {
    return CoeffExpr(make_binary(Kind::Add, std::move(a.root_), std::move(b.root_)));
}

CoeffExpr CoeffExpr::sub(CoeffExpr a, CoeffExpr b) {
    return CoeffExpr(make_binary(Kind::Sub, std::move(a.root_), std::move(b.root_)));
}

CoeffExpr CoeffExpr::mul(CoeffExpr a, CoeffExpr b) {
    return CoeffExpr(make_binary(Kind::Mul, std::move(a.root_), std::move(b.root_)));
}

CoeffExpr CoeffExpr::pow(CoeffExpr base, unsigned long e) {
    return CoeffExpr(make_pow(std::move(base.root_), e));
}

CoeffExpr CoeffExpr::negate(CoeffExpr a) {
    return CoeffExpr(make_negate(std::move(a.root_)));
}

QPoly CoeffExpr::eval(long n, long k) const {
    return eval_node(*root_, n, k);
}

std::string CoeffExpr::render() const {
    return render_node(*root_);
}

bool CoeffExpr::depends_on_nk() const {
    return node_depends_on_nk(*root_);
}

bool CoeffExpr::operator==(const CoeffExpr& o) const {
    return nodes_equal(*root_, *o.root_);
}

}  // namespace qlc
