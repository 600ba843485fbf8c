#pragma once

#include <cmath>
#include <cstdint>
#include <memory>
#include <numbers>
#include <string>
#include <string_view>
#include <variant>

#include "nullsurf/dual.hpp"
#include "nullsurf/errors.hpp"

// Arithmetic expressions over the variables s, t and w.
//
// Grammar (ASCII, no implicit multiplication):
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := unary ('^' factor)?          '^' is right-associative
//   unary  := '-' unary | atom
//   atom   := number | ident | ident '(' expr ')' | '(' expr ')'
//
// Note that the base of '^' is a unary, so "-s^2" means (-s)^2. Functions:
// sin cos tan exp log sqrt sinh cosh. Constant: pi. Trees are immutable and
// shared through ExprPtr.

namespace nullsurf {

enum class Variable : std::uint8_t { S = 0, T = 1, W = 2 };

constexpr unsigned var_bit(Variable v) { return 1u << static_cast<unsigned>(v); }

inline const char* variable_name(Variable v) {
    switch (v) {
        case Variable::S: return "s";
        case Variable::T: return "t";
        case Variable::W: return "w";
    }
    return "?";
}

enum class BinaryOp : std::uint8_t { Add, Sub, Mul, Div, Pow };
enum class UnaryFn : std::uint8_t { Sin, Cos, Tan, Exp, Log, Sqrt, Sinh, Cosh };

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
public:
    struct Number {
        double value;
    };
    struct VarRef {
        Variable var;
    };
    struct PiConst {};
    struct Negate {
        ExprPtr arg;
    };
    struct Binary {
        BinaryOp op;
        ExprPtr lhs;
        ExprPtr rhs;
    };
    struct Call {
        UnaryFn fn;
        ExprPtr arg;
    };
    using Node = std::variant<Number, VarRef, PiConst, Negate, Binary, Call>;

    explicit Expr(Node n);

    static ExprPtr number(double v) { return std::make_shared<Expr>(Number{v}); }
    static ExprPtr variable(Variable v) { return std::make_shared<Expr>(VarRef{v}); }
    static ExprPtr pi() { return std::make_shared<Expr>(PiConst{}); }
    static ExprPtr negate(ExprPtr a) { return std::make_shared<Expr>(Negate{std::move(a)}); }
    static ExprPtr binary(BinaryOp op, ExprPtr l, ExprPtr r) {
        return std::make_shared<Expr>(Binary{op, std::move(l), std::move(r)});
    }
    static ExprPtr call(UnaryFn fn, ExprPtr a) {
        return std::make_shared<Expr>(Call{fn, std::move(a)});
    }

    const Node& node() const { return node_; }
    unsigned var_mask() const { return var_mask_; }
    bool uses(Variable v) const { return (var_mask_ & var_bit(v)) != 0; }
    bool is_constant() const { return var_mask_ == 0; }

private:
    Node node_;
    unsigned var_mask_ = 0;
};

ExprPtr parse(std::string_view text);

// Produces text that reparses to the same tree (negative literals come back
// as a negation of the positive literal, which evaluates identically).
std::string render(const Expr& e);
inline std::string render(const ExprPtr& e) { return render(*e); }

template <class T>
struct EvalVars {
    T s{};
    T t{};
    T w{};
};

namespace detail {
double eval_const_double(const Expr& e);

inline bool integer_exponent(double v, long long& out) {
    if (!std::isfinite(v) || v != std::nearbyint(v) || std::abs(v) > 1e9) return false;
    out = static_cast<long long>(v);
    return true;
}
}  // namespace detail

// Generic evaluator over any jet scalar. Domain violations throw EvalError;
// finiteness of the final result is checked by the public entry points.
template <class T>
T evaluate(const Expr& e, const EvalVars<T>& vars) {
    return std::visit(
        [&](const auto& n) -> T {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, Expr::Number>) {
                return T(n.value);
            } else if constexpr (std::is_same_v<N, Expr::VarRef>) {
                switch (n.var) {
                    case Variable::S: return vars.s;
                    case Variable::T: return vars.t;
                    case Variable::W: return vars.w;
                }
                return T(0.0);
            } else if constexpr (std::is_same_v<N, Expr::PiConst>) {
                return T(std::numbers::pi);
            } else if constexpr (std::is_same_v<N, Expr::Negate>) {
                return -evaluate(*n.arg, vars);
            } else if constexpr (std::is_same_v<N, Expr::Binary>) {
                using std::exp;
                using std::log;
                switch (n.op) {
                    case BinaryOp::Add: return evaluate(*n.lhs, vars) + evaluate(*n.rhs, vars);
                    case BinaryOp::Sub: return evaluate(*n.lhs, vars) - evaluate(*n.rhs, vars);
                    case BinaryOp::Mul: return evaluate(*n.lhs, vars) * evaluate(*n.rhs, vars);
                    case BinaryOp::Div: {
                        T num = evaluate(*n.lhs, vars);
                        T den = evaluate(*n.rhs, vars);
                        if (value_of(den) == 0.0) throw EvalError("division by zero");
                        return num / den;
                    }
                    case BinaryOp::Pow: {
                        T base = evaluate(*n.lhs, vars);
                        if (n.rhs->is_constant()) {
                            double ev = detail::eval_const_double(*n.rhs);
                            long long k = 0;
                            if (detail::integer_exponent(ev, k)) {
                                if (k < 0 && value_of(base) == 0.0)
                                    throw EvalError("zero raised to a negative power");
                                return powi(base, k);
                            }
                            if (value_of(base) <= 0.0)
                                throw EvalError(
                                    "non-positive base with non-integer exponent");
                            return exp(T(ev) * log(base));
                        }
                        T ex = evaluate(*n.rhs, vars);
                        if (value_of(base) <= 0.0)
                            throw EvalError("non-positive base with variable exponent");
                        return exp(ex * log(base));
                    }
                }
                return T(0.0);
            } else {  // Call
                using std::cos;
                using std::cosh;
                using std::exp;
                using std::log;
                using std::sin;
                using std::sinh;
                using std::sqrt;
                using std::tan;
                T a = evaluate(*n.arg, vars);
                switch (n.fn) {
                    case UnaryFn::Sin: return sin(a);
                    case UnaryFn::Cos: return cos(a);
                    case UnaryFn::Tan: return tan(a);
                    case UnaryFn::Exp: return exp(a);
                    case UnaryFn::Log:
                        if (value_of(a) <= 0.0) throw EvalError("log of a non-positive value");
                        return log(a);
                    case UnaryFn::Sqrt:
                        if (value_of(a) < 0.0) throw EvalError("sqrt of a negative value");
                        return sqrt(a);
                    case UnaryFn::Sinh: return sinh(a);
                    case UnaryFn::Cosh: return cosh(a);
                }
                return T(0.0);
            }
        },
        e.node());
}

using Dual2d = Dual2<double>;

// Plain evaluation at (s, t). The expression must not reference w.
double eval(const Expr& e, double s, double t);

// Value and first two derivatives with respect to `wrt`, the other variable
// held fixed. The expression must not reference w.
Dual2d eval_dual(const Expr& e, Variable wrt, double s, double t);

// Same for an expression in w alone.
Dual2d eval_dual_w(const Expr& e, double w);

}  // namespace nullsurf
