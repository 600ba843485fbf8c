#pragma once

#include <string>
#include <variant>
#include <vector>

#include "nullsurf/expr.hpp"
#include "nullsurf/report.hpp"

// Marching-scale functions x(s,t), y(s,t), z(s,t): the frame coefficients
// that steer a family member away from the spine curve. Three structured
// forms carry a checkable sufficient condition; the custom form is free-form
// and only the general numerical check applies.

namespace nullsurf {

// x = k(s)*X(t), y = m(s)*Y(t), z = w(s)*Z(t)
struct ProductForm {
    ExprPtr k, m, w;
    ExprPtr X, Y, Z;
};

// x = sum_{i=1..p} a1[i-1] * (k(s)*X(t))^i, same shape for y and z
struct PolynomialForm {
    std::vector<double> a1, a2, a3;
    ExprPtr k, m, w;
    ExprPtr X, Y, Z;
};

// x = f(polynomial x-sum), y = g(...), z = h(...) with f, g, h in w
struct ComposedForm {
    PolynomialForm core;
    ExprPtr f, g, h;
};

struct CustomForm {
    ExprPtr x, y, z;
};

struct MarchingScale {
    std::variant<ProductForm, PolynomialForm, ComposedForm, CustomForm> form;
    double t0 = 0.0;
    double t_lo = 0.0;
    double t_hi = 1.0;
};

const char* form_name(const MarchingScale& ms);

// Structural validation: variable restrictions per slot (k, m, w in s; X, Y,
// Z in t; f, g, h in w; custom x, y, z in s and t), equal nonzero coefficient
// lengths, t0 inside the t-domain. Throws Error describing the first problem.
void validate_marching(const MarchingScale& ms);

struct ConditionVerdict {
    std::string condition_id;
    bool passed = false;
    double max_defect = 0.0;
    double mean_defect = 0.0;
    double worst_s = 0.0;
    std::string detail;
};

template <class T>
struct MarchingValue {
    T x, y, z;
};

namespace detail {

// sum_i coef[i-1] * (ks*xt)^i with i starting at 1
template <class T>
T poly_sum(const std::vector<double>& coef, const T& ks, const T& xt) {
    T base = ks * xt;
    T acc(0.0);
    T pw(1.0);
    for (double c : coef) {
        pw = pw * base;
        acc = acc + T(c) * pw;
    }
    return acc;
}

template <class T>
T outer_fn(const ExprPtr& f, const T& w) {
    EvalVars<T> vars;
    vars.w = w;
    return evaluate(*f, vars);
}

}  // namespace detail

template <class T>
MarchingValue<T> marching_eval(const MarchingScale& ms, const EvalVars<T>& vars) {
    return std::visit(
        [&](const auto& form) -> MarchingValue<T> {
            using F = std::decay_t<decltype(form)>;
            if constexpr (std::is_same_v<F, ProductForm>) {
                return {evaluate(*form.k, vars) * evaluate(*form.X, vars),
                        evaluate(*form.m, vars) * evaluate(*form.Y, vars),
                        evaluate(*form.w, vars) * evaluate(*form.Z, vars)};
            } else if constexpr (std::is_same_v<F, PolynomialForm>) {
                return {detail::poly_sum(form.a1, evaluate(*form.k, vars),
                                         evaluate(*form.X, vars)),
                        detail::poly_sum(form.a2, evaluate(*form.m, vars),
                                         evaluate(*form.Y, vars)),
                        detail::poly_sum(form.a3, evaluate(*form.w, vars),
                                         evaluate(*form.Z, vars))};
            } else if constexpr (std::is_same_v<F, ComposedForm>) {
                const PolynomialForm& c = form.core;
                T sx = detail::poly_sum(c.a1, evaluate(*c.k, vars), evaluate(*c.X, vars));
                T sy = detail::poly_sum(c.a2, evaluate(*c.m, vars), evaluate(*c.Y, vars));
                T sz = detail::poly_sum(c.a3, evaluate(*c.w, vars), evaluate(*c.Z, vars));
                return {detail::outer_fn(form.f, sx), detail::outer_fn(form.g, sy),
                        detail::outer_fn(form.h, sz)};
            } else {
                return {evaluate(*form.x, vars), evaluate(*form.y, vars),
                        evaluate(*form.z, vars)};
            }
        },
        ms.form);
}

struct MarchingPartials {
    double x = 0, y = 0, z = 0;
    double xs = 0, ys = 0, zs = 0;
    double xt = 0, yt = 0, zt = 0;
    double xss = 0, yss = 0, zss = 0;
    double xtt = 0, ytt = 0, ztt = 0;
    double xst = 0, yst = 0, zst = 0;
};

MarchingPartials partials_marching(const MarchingScale& ms, double s, double t);

ConditionVerdict check_isoparametric(const MarchingScale& ms, double s_lo, double s_hi,
                                     int n_samples, double eps);

// Throws PreconditionError when the isoparametric condition fails at
// eps_iso: the asymptotic reduction is only derived on top of it.
ConditionVerdict check_asymptotic_general(const MarchingScale& ms, double s_lo, double s_hi,
                                          int n_samples, double eps, double eps_iso);

// Structural sufficient condition of the form (custom forms are rejected).
// The defect combines the boundary part with the best branch of the
// disjunction, so passed == (max_defect <= eps).
ConditionVerdict check_sufficient_form(const MarchingScale& ms, double s_lo, double s_hi,
                                       int n_samples, double eps);

}  // namespace nullsurf
