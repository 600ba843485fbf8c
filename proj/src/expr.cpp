#include "nullsurf/expr.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <utility>

namespace nullsurf {

Expr::Expr(Node n) : node_(std::move(n)) {
    var_mask_ = std::visit(
        [](const auto& v) -> unsigned {
            using N = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<N, VarRef>) {
                return var_bit(v.var);
            } else if constexpr (std::is_same_v<N, Negate>) {
                return v.arg->var_mask();
            } else if constexpr (std::is_same_v<N, Binary>) {
                return v.lhs->var_mask() | v.rhs->var_mask();
            } else if constexpr (std::is_same_v<N, Call>) {
                return v.arg->var_mask();
            } else {
                return 0u;
            }
        },
        node_);
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        throw ParseError(msg, at);
    }

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    ExprPtr parse_expr() {
        ExprPtr lhs = parse_term();
        for (;;) {
            if (consume('+')) {
                lhs = Expr::binary(BinaryOp::Add, std::move(lhs), parse_term());
            } else if (consume('-')) {
                lhs = Expr::binary(BinaryOp::Sub, std::move(lhs), parse_term());
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_factor();
        for (;;) {
            if (consume('*')) {
                lhs = Expr::binary(BinaryOp::Mul, std::move(lhs), parse_factor());
            } else if (consume('/')) {
                lhs = Expr::binary(BinaryOp::Div, std::move(lhs), parse_factor());
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_factor() {
        ExprPtr base = parse_unary();
        if (consume('^')) {
            // Right-associative: a^b^c = a^(b^c).
            return Expr::binary(BinaryOp::Pow, std::move(base), parse_factor());
        }
        return base;
    }

    ExprPtr parse_unary() {
        if (consume('-')) return Expr::negate(parse_unary());
        return parse_atom();
    }

    ExprPtr parse_atom() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of expression", pos);
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
        if (c == '(') {
            ++pos;
            ExprPtr inner = parse_expr();
            if (!consume(')')) fail("expected ')'", pos);
            return inner;
        }
        fail(std::string("unexpected character '") + c + "'", pos);
    }

    ExprPtr parse_number() {
        std::size_t start = pos;
        const char* begin = text.data() + pos;
        const char* end = text.data() + text.size();
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || ptr == begin) fail("invalid number", start);
        pos += static_cast<std::size_t>(ptr - begin);
        return Expr::number(value);
    }

    ExprPtr parse_ident() {
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        std::string_view name = text.substr(start, pos - start);

        if (consume('(')) {
            UnaryFn fn;
            if (name == "sin") fn = UnaryFn::Sin;
            else if (name == "cos") fn = UnaryFn::Cos;
            else if (name == "tan") fn = UnaryFn::Tan;
            else if (name == "exp") fn = UnaryFn::Exp;
            else if (name == "log") fn = UnaryFn::Log;
            else if (name == "sqrt") fn = UnaryFn::Sqrt;
            else if (name == "sinh") fn = UnaryFn::Sinh;
            else if (name == "cosh") fn = UnaryFn::Cosh;
            else fail("unknown function '" + std::string(name) + "'", start);
            ExprPtr arg = parse_expr();
            if (!consume(')')) fail("expected ')' after function argument", pos);
            return Expr::call(fn, std::move(arg));
        }

        if (name == "s") return Expr::variable(Variable::S);
        if (name == "t") return Expr::variable(Variable::T);
        if (name == "w") return Expr::variable(Variable::W);
        if (name == "pi") return Expr::pi();
        fail("unknown identifier '" + std::string(name) + "'", start);
    }
};

const char* fn_name(UnaryFn fn) {
    switch (fn) {
        case UnaryFn::Sin: return "sin";
        case UnaryFn::Cos: return "cos";
        case UnaryFn::Tan: return "tan";
        case UnaryFn::Exp: return "exp";
        case UnaryFn::Log: return "log";
        case UnaryFn::Sqrt: return "sqrt";
        case UnaryFn::Sinh: return "sinh";
        case UnaryFn::Cosh: return "cosh";
    }
    return "?";
}

std::string fmt_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// The renderer mirrors the grammar level by level so that the output
// reparses to the identical tree. render_unary wraps anything below
// unary precedence in parentheses; render_factor additionally keeps the
// pow base at unary level, which preserves (-s)^2 round trips.
std::string render_expr(const Expr& e);
std::string render_term(const Expr& e);
std::string render_factor(const Expr& e);
std::string render_unary(const Expr& e);

bool is_add_sub(const Expr& e) {
    const auto* b = std::get_if<Expr::Binary>(&e.node());
    return b && (b->op == BinaryOp::Add || b->op == BinaryOp::Sub);
}

bool is_mul_div(const Expr& e) {
    const auto* b = std::get_if<Expr::Binary>(&e.node());
    return b && (b->op == BinaryOp::Mul || b->op == BinaryOp::Div);
}

bool is_pow(const Expr& e) {
    const auto* b = std::get_if<Expr::Binary>(&e.node());
    return b && b->op == BinaryOp::Pow;
}

std::string render_atom_or_paren(const Expr& e) {
    return std::visit(
        [&](const auto& n) -> std::string {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, Expr::Number>) {
                double v = n.value;
                if (v < 0.0 || (v == 0.0 && std::signbit(v)))
                    return "(" + fmt_number(v) + ")";
                return fmt_number(v);
            } else if constexpr (std::is_same_v<N, Expr::VarRef>) {
                return variable_name(n.var);
            } else if constexpr (std::is_same_v<N, Expr::PiConst>) {
                return "pi";
            } else if constexpr (std::is_same_v<N, Expr::Call>) {
                return std::string(fn_name(n.fn)) + "(" + render_expr(*n.arg) + ")";
            } else {
                return "(" + render_expr(e) + ")";
            }
        },
        e.node());
}

std::string render_unary(const Expr& e) {
    if (const auto* neg = std::get_if<Expr::Negate>(&e.node()))
        return "-" + render_unary(*neg->arg);
    return render_atom_or_paren(e);
}

std::string render_factor(const Expr& e) {
    if (is_pow(e)) {
        const auto& b = std::get<Expr::Binary>(e.node());
        return render_unary(*b.lhs) + "^" + render_factor(*b.rhs);
    }
    return render_unary(e);
}

std::string render_term(const Expr& e) {
    if (is_mul_div(e)) {
        const auto& b = std::get<Expr::Binary>(e.node());
        const char* op = b.op == BinaryOp::Mul ? "*" : "/";
        return render_term(*b.lhs) + op + render_factor(*b.rhs);
    }
    return render_factor(e);
}

std::string render_expr(const Expr& e) {
    if (is_add_sub(e)) {
        const auto& b = std::get<Expr::Binary>(e.node());
        const char* op = b.op == BinaryOp::Add ? " + " : " - ";
        return render_expr(*b.lhs) + op + render_term(*b.rhs);
    }
    return render_term(e);
}

}  // namespace

namespace detail {

double eval_const_double(const Expr& e) {
    EvalVars<double> none{};
    return evaluate(e, none);
}

}  // namespace detail

ExprPtr parse(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c >= 0x80) throw ParseError("non-ASCII byte in expression", i);
    }
    Parser p{text};
    ExprPtr root = p.parse_expr();
    if (!p.at_end())
        p.fail(std::string("unexpected trailing character '") + p.text[p.pos] + "'", p.pos);
    return root;
}

std::string render(const Expr& e) { return render_expr(e); }

double eval(const Expr& e, double s, double t) {
    if (e.uses(Variable::W)) throw EvalError("expression must not reference w here");
    EvalVars<double> v{s, t, 0.0};
    double r = evaluate(e, v);
    if (!std::isfinite(r)) throw EvalError("expression evaluated to a non-finite value");
    return r;
}

Dual2d eval_dual(const Expr& e, Variable wrt, double s, double t) {
    if (e.uses(Variable::W)) throw EvalError("expression must not reference w here");
    if (wrt == Variable::W) throw EvalError("cannot differentiate with respect to w here");
    EvalVars<Dual2d> v;
    v.s = wrt == Variable::S ? d2_var(s) : d2_const(s);
    v.t = wrt == Variable::T ? d2_var(t) : d2_const(t);
    v.w = d2_const(0.0);
    Dual2d r = evaluate(e, v);
    if (!all_finite(r)) throw EvalError("expression evaluated to a non-finite value");
    return r;
}

Dual2d eval_dual_w(const Expr& e, double w) {
    if (e.uses(Variable::S) || e.uses(Variable::T))
        throw EvalError("expression must reference only w here");
    EvalVars<Dual2d> v;
    v.s = d2_const(0.0);
    v.t = d2_const(0.0);
    v.w = d2_var(w);
    Dual2d r = evaluate(e, v);
    if (!all_finite(r)) throw EvalError("expression evaluated to a non-finite value");
    return r;
}

}  // namespace nullsurf
