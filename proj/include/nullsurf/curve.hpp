#pragma once

#include <array>
#include <optional>

#include "nullsurf/expr.hpp"
#include "nullsurf/lorentz.hpp"
#include "nullsurf/report.hpp"

namespace nullsurf {

struct AnalyticFrame {
    std::array<ExprPtr, 3> ell;
    std::array<ExprPtr, 3> n;
    std::array<ExprPtr, 3> u;
};

// A curve s -> (c0(s), c1(s), c2(s)) on [s_min, s_max], expected to be null.
// Without an analytic frame the Cartan frame is constructed from derivatives.
struct NullCurve {
    std::array<ExprPtr, 3> components;
    double s_min = 0.0;
    double s_max = 1.0;
    std::optional<AnalyticFrame> frame;
};

// Below this k1 the direction u = alpha''/k1 is meaningless and frame
// construction refuses to proceed.
inline constexpr double kCurvatureFloor = 1e-8;

template <class T>
struct Frame {
    Vec3<T> ell, n, u;
    T k1, k2;
};

struct CartanFrameSample {
    double s = 0.0;
    MVec3 position{};
    MVec3 ell{}, n{}, u{};
    MVec3 dell{}, dn{}, du{};
    double k1 = 0.0, k2 = 0.0;
    double dk1 = 0.0, dk2 = 0.0;
};

template <class T>
Vec3<T> curve_point(const NullCurve& c, const T& s) {
    EvalVars<T> vars;
    vars.s = s;
    return {evaluate(*c.components[0], vars), evaluate(*c.components[1], vars),
            evaluate(*c.components[2], vars)};
}

void require_in_domain(const NullCurve& c, double s);

MVec3 evaluate_curve(const NullCurve& c, double s);

// Frame with the first s-derivative attached to every entry. Performs no
// domain check: finite-difference cross-checks evaluate a hair outside the
// stated interval.
Frame<Dual1<double>> cartan_frame_d1(const NullCurve& c, double s);

CartanFrameSample build_cartan_frame(const NullCurve& c, double s);

VerificationItem check_null(const NullCurve& c, int n_samples, double eps);

// Metric, Frenet, cross-identity and determinant checks over a uniform
// sample grid. A frame following the alternate <n,u> = 1 convention gets an
// extra warning item explaining the metric-nu failure.
VerificationReport validate_frame(const NullCurve& c, int n_samples, const Tolerances& tol);

}  // namespace nullsurf
