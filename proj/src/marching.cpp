#include "nullsurf/marching.hpp"

#include <algorithm>
#include <cmath>

#include "nullsurf/util.hpp"

namespace nullsurf {

const char* form_name(const MarchingScale& ms) {
    return std::visit(
        [](const auto& f) -> const char* {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, ProductForm>) return "product";
            else if constexpr (std::is_same_v<F, PolynomialForm>) return "polynomial";
            else if constexpr (std::is_same_v<F, ComposedForm>) return "composed";
            else return "custom";
        },
        ms.form);
}

namespace {

constexpr unsigned kMaskS = var_bit(Variable::S);
constexpr unsigned kMaskT = var_bit(Variable::T);
constexpr unsigned kMaskW = var_bit(Variable::W);

void require_vars(const ExprPtr& e, unsigned allowed, const std::string& slot,
                  const char* allowed_desc) {
    if (!e) throw Error("marching slot " + slot + " is missing");
    if ((e->var_mask() & ~allowed) != 0)
        throw Error("marching slot " + slot + " may only use " + allowed_desc);
}

void validate_poly(const PolynomialForm& f, const std::string& prefix) {
    require_vars(f.k, kMaskS, prefix + "k", "s");
    require_vars(f.m, kMaskS, prefix + "m", "s");
    require_vars(f.w, kMaskS, prefix + "w", "s");
    require_vars(f.X, kMaskT, prefix + "X", "t");
    require_vars(f.Y, kMaskT, prefix + "Y", "t");
    require_vars(f.Z, kMaskT, prefix + "Z", "t");
    std::size_t p = f.a1.size();
    if (p == 0) throw Error("polynomial coefficient lists must have length >= 1");
    if (f.a2.size() != p || f.a3.size() != p)
        throw Error("polynomial coefficient lists a1, a2, a3 must have equal length");
    for (double c : f.a1)
        if (!std::isfinite(c)) throw Error("non-finite coefficient in a1");
    for (double c : f.a2)
        if (!std::isfinite(c)) throw Error("non-finite coefficient in a2");
    for (double c : f.a3)
        if (!std::isfinite(c)) throw Error("non-finite coefficient in a3");
}

double finite_or_throw(double v, const char* what) {
    if (!std::isfinite(v)) throw EvalError(std::string(what) + " evaluated to a non-finite value");
    return v;
}

}  // namespace

void validate_marching(const MarchingScale& ms) {
    if (!std::isfinite(ms.t0) || !std::isfinite(ms.t_lo) || !std::isfinite(ms.t_hi))
        throw Error("t0 and t_domain must be finite");
    if (!(ms.t_lo < ms.t_hi)) throw Error("t_domain must satisfy t_lo < t_hi");
    if (!(ms.t0 >= ms.t_lo && ms.t0 <= ms.t_hi)) throw Error("t0 must lie inside t_domain");

    std::visit(
        [&](const auto& f) {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, ProductForm>) {
                require_vars(f.k, kMaskS, "k", "s");
                require_vars(f.m, kMaskS, "m", "s");
                require_vars(f.w, kMaskS, "w", "s");
                require_vars(f.X, kMaskT, "X", "t");
                require_vars(f.Y, kMaskT, "Y", "t");
                require_vars(f.Z, kMaskT, "Z", "t");
            } else if constexpr (std::is_same_v<F, PolynomialForm>) {
                validate_poly(f, "");
            } else if constexpr (std::is_same_v<F, ComposedForm>) {
                validate_poly(f.core, "core ");
                require_vars(f.f, kMaskW, "f", "w");
                require_vars(f.g, kMaskW, "g", "w");
                require_vars(f.h, kMaskW, "h", "w");
            } else {
                require_vars(f.x, kMaskS | kMaskT, "x", "s and t");
                require_vars(f.y, kMaskS | kMaskT, "y", "s and t");
                require_vars(f.z, kMaskS | kMaskT, "z", "s and t");
            }
        },
        ms.form);
}

MarchingPartials partials_marching(const MarchingScale& ms, double s, double t) {
    using D2 = Dual2<double>;
    using D22 = Dual2<D2>;
    EvalVars<D22> vars;
    vars.s = D22{d2_const(s), d2_const(1.0), d2_const(0.0)};
    vars.t = D22{d2_var(t), d2_const(0.0), d2_const(0.0)};
    MarchingValue<D22> mv = marching_eval(ms, vars);
    if (!all_finite(mv.x) || !all_finite(mv.y) || !all_finite(mv.z))
        throw EvalError("marching functions evaluated to a non-finite value");

    MarchingPartials p;
    p.x = mv.x.v.v;
    p.y = mv.y.v.v;
    p.z = mv.z.v.v;
    p.xt = mv.x.v.d1;
    p.yt = mv.y.v.d1;
    p.zt = mv.z.v.d1;
    p.xtt = mv.x.v.d2;
    p.ytt = mv.y.v.d2;
    p.ztt = mv.z.v.d2;
    p.xs = mv.x.d1.v;
    p.ys = mv.y.d1.v;
    p.zs = mv.z.d1.v;
    p.xst = mv.x.d1.d1;
    p.yst = mv.y.d1.d1;
    p.zst = mv.z.d1.d1;
    p.xss = mv.x.d2.v;
    p.yss = mv.y.d2.v;
    p.zss = mv.z.d2.v;
    return p;
}

ConditionVerdict check_isoparametric(const MarchingScale& ms, double s_lo, double s_hi,
                                     int n_samples, double eps) {
    if (n_samples < 2) throw PreconditionError("check_isoparametric needs at least 2 samples");
    DefectStats st;
    EvalVars<double> vars;
    vars.t = ms.t0;
    for (double s : linspace(s_lo, s_hi, n_samples)) {
        vars.s = s;
        MarchingValue<double> v = marching_eval(ms, vars);
        st.add(s, std::abs(finite_or_throw(v.x, "x")) + std::abs(finite_or_throw(v.y, "y")) +
                      std::abs(finite_or_throw(v.z, "z")));
    }
    ConditionVerdict cv;
    cv.condition_id = "Iso-3.2";
    cv.passed = st.max_abs <= eps;
    cv.max_defect = st.max_abs;
    cv.mean_defect = st.mean_abs();
    cv.worst_s = st.worst_s;
    cv.detail = "defect is |x| + |y| + |z| at t0 = " + fmt_g3(ms.t0);
    return cv;
}

ConditionVerdict check_asymptotic_general(const MarchingScale& ms, double s_lo, double s_hi,
                                          int n_samples, double eps, double eps_iso) {
    ConditionVerdict iso = check_isoparametric(ms, s_lo, s_hi, n_samples, eps_iso);
    if (!iso.passed)
        throw PreconditionError(
            "the asymptotic condition is only derived on top of the isoparametric one, "
            "which fails with defect " +
            fmt_g3(iso.max_defect) + " at s = " + fmt_g3(iso.worst_s));

    DefectStats st;
    EvalVars<Dual1<double>> vars;
    vars.t = d1_var(ms.t0);
    for (double s : linspace(s_lo, s_hi, n_samples)) {
        vars.s = d1_const(s);
        MarchingValue<Dual1<double>> v = marching_eval(ms, vars);
        if (!all_finite(v.y)) throw EvalError("y evaluated to a non-finite value");
        st.add(s, v.y.d);
    }
    ConditionVerdict cv;
    cv.condition_id = "Asym-3.4";
    cv.passed = st.max_abs <= eps;
    cv.max_defect = st.max_abs;
    cv.mean_defect = st.mean_abs();
    cv.worst_s = st.worst_s;
    cv.detail = "defect is |dy/dt(s, t0)|";
    return cv;
}

namespace {

double eval_at_t(const ExprPtr& e, double t) {
    EvalVars<double> vars;
    vars.t = t;
    return finite_or_throw(evaluate(*e, vars), "boundary factor");
}

double deriv_at_t(const ExprPtr& e, double t) {
    return eval_dual(*e, Variable::T, 0.0, t).d1;
}

double max_abs_in_s(const ExprPtr& e, double lo, double hi, int n, double& worst) {
    EvalVars<double> vars;
    double m = -1.0;
    for (double s : linspace(lo, hi, n)) {
        vars.s = s;
        double v = std::abs(finite_or_throw(evaluate(*e, vars), "s-factor"));
        if (v > m) {
            m = v;
            worst = s;
        }
    }
    return m;
}

struct Branch {
    const char* name;
    double defect;
};

Branch best_branch(const std::vector<Branch>& branches) {
    Branch best = branches.front();
    for (const Branch& b : branches)
        if (b.defect < best.defect) best = b;
    return best;
}

}  // namespace

ConditionVerdict check_sufficient_form(const MarchingScale& ms, double s_lo, double s_hi,
                                       int n_samples, double eps) {
    if (n_samples < 2) throw PreconditionError("check_sufficient_form needs at least 2 samples");
    if (std::holds_alternative<CustomForm>(ms.form))
        throw PreconditionError(
            "the custom form carries no structural sufficient condition; "
            "use the general asymptotic check");

    const double t0 = ms.t0;
    ConditionVerdict cv;
    double boundary = 0.0;
    std::vector<Branch> branches;
    double m_worst_s = s_lo;

    auto poly_parts = [&](const PolynomialForm& f) {
        boundary = std::max({std::abs(eval_at_t(f.X, t0)), std::abs(eval_at_t(f.Y, t0)),
                             std::abs(eval_at_t(f.Z, t0))});
        branches.push_back({"a2_1 = 0", std::abs(f.a2.front())});
        branches.push_back({"m == 0", max_abs_in_s(f.m, s_lo, s_hi, n_samples, m_worst_s)});
        branches.push_back({"dY/dt(t0) = 0", std::abs(deriv_at_t(f.Y, t0))});
    };

    if (const auto* pf = std::get_if<ProductForm>(&ms.form)) {
        cv.condition_id = "Suff-3.5";
        boundary = std::max({std::abs(eval_at_t(pf->X, t0)), std::abs(eval_at_t(pf->Y, t0)),
                             std::abs(eval_at_t(pf->Z, t0))});
        branches.push_back({"m == 0", max_abs_in_s(pf->m, s_lo, s_hi, n_samples, m_worst_s)});
        branches.push_back({"dY/dt(t0) = 0", std::abs(deriv_at_t(pf->Y, t0))});
    } else if (const auto* yf = std::get_if<PolynomialForm>(&ms.form)) {
        cv.condition_id = "Suff-3.7";
        poly_parts(*yf);
    } else {
        const auto& cf = std::get<ComposedForm>(ms.form);
        cv.condition_id = "Suff-3.9";
        poly_parts(cf.core);
        EvalVars<double> zero{};
        boundary = std::max({boundary, std::abs(finite_or_throw(evaluate(*cf.f, zero), "f(0)")),
                             std::abs(finite_or_throw(evaluate(*cf.g, zero), "g(0)")),
                             std::abs(finite_or_throw(evaluate(*cf.h, zero), "h(0)"))});
        branches.push_back({"g'(0) = 0", std::abs(eval_dual_w(*cf.g, 0.0).d1)});
    }

    Branch best = best_branch(branches);
    cv.max_defect = std::max(boundary, best.defect);
    cv.mean_defect = cv.max_defect;
    cv.passed = cv.max_defect <= eps;
    cv.worst_s = m_worst_s;
    if (cv.passed) {
        cv.detail = "boundary factors vanish at t0 (defect " + fmt_g3(boundary) +
                    "); disjunction holds via branch '" + best.name + "' (defect " +
                    fmt_g3(best.defect) + ")";
    } else if (boundary > eps) {
        cv.detail = "boundary factors do not vanish at t0 (defect " + fmt_g3(boundary) + ")";
    } else {
        cv.detail = "boundary holds but no branch of the disjunction does; closest was '" +
                    std::string(best.name) + "' with defect " + fmt_g3(best.defect);
    }
    return cv;
}

}  // namespace nullsurf
