#pragma once

// Random marching forms that satisfy one of the structural sufficient
// conditions by construction, for soundness sweeps: every generated form must
// pass check_sufficient_form and have a vanishing asymptotic defect.

#include <random>
#include <string>
#include <vector>

#include "nullsurf/expr.hpp"
#include "nullsurf/marching.hpp"
#include "nullsurf/util.hpp"

namespace formgen {

struct Generated {
    nullsurf::MarchingScale ms;
    // Which disjunct makes the form sufficient, for failure messages.
    std::string branch;
};

namespace detail {

inline std::string shifted(const std::string& pattern, double t0) {
    // Replace each '@' in the pattern with "(t - (t0))".
    std::string u = "(t - (" + nullsurf::fmt_g17(t0) + "))";
    std::string out;
    for (char c : pattern)
        if (c == '@')
            out += u;
        else
            out += c;
    return out;
}

inline std::string pick(std::mt19937& rng, const std::vector<std::string>& pool) {
    std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
    return pool[d(rng)];
}

// s-expressions with moderate values and derivatives on [-2, 2].
inline std::string pick_s_expr(std::mt19937& rng) {
    static const std::vector<std::string> pool = {
        "1", "2", "s", "1 + s^2/4", "sin(s)", "cos(s)", "exp(s/8)", "s/3 - 1",
    };
    return pick(rng, pool);
}

// t-expressions vanishing at t = t0 (single zero allowed).
inline std::string pick_root_expr(std::mt19937& rng, double t0) {
    static const std::vector<std::string> pool = {
        "@", "2*@", "@^2", "@^3/3", "sin(@)", "@*cos(@)", "sinh(@)/2", "@ + @^2",
    };
    return shifted(pick(rng, pool), t0);
}

// t-expressions with a double zero at t = t0.
inline std::string pick_flat_expr(std::mt19937& rng, double t0) {
    static const std::vector<std::string> pool = {
        "@^2", "@^2/2", "@^3", "@^2*cos(@)", "1 - cos(@)", "sin(@)^2",
    };
    return shifted(pick(rng, pool), t0);
}

inline std::vector<double> pick_coeffs(std::mt19937& rng, std::size_t n, bool zero_first) {
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = d(rng);
    if (zero_first) out[0] = 0.0;
    return out;
}

}  // namespace detail

inline Generated random_sufficient_form(std::mt19937& rng) {
    using namespace nullsurf;
    std::uniform_real_distribution<double> t0_dist(-1.0, 1.0);
    std::uniform_int_distribution<int> kind_dist(0, 5);
    std::uniform_int_distribution<std::size_t> len_dist(1, 3);

    Generated g;
    double t0 = t0_dist(rng);
    g.ms.t0 = t0;
    g.ms.t_lo = t0 - 1.0;
    g.ms.t_hi = t0 + 1.0;

    int kind = kind_dist(rng);
    switch (kind) {
        case 0: {  // product, m identically zero
            ProductForm f;
            f.k = parse(detail::pick_s_expr(rng));
            f.m = parse("0");
            f.w = parse(detail::pick_s_expr(rng));
            f.X = parse(detail::pick_root_expr(rng, t0));
            f.Y = parse(detail::pick_root_expr(rng, t0));
            f.Z = parse(detail::pick_root_expr(rng, t0));
            g.ms.form = std::move(f);
            g.branch = "product, m == 0";
            break;
        }
        case 1: {  // product, Y with a double zero
            ProductForm f;
            f.k = parse(detail::pick_s_expr(rng));
            f.m = parse(detail::pick_s_expr(rng));
            f.w = parse(detail::pick_s_expr(rng));
            f.X = parse(detail::pick_root_expr(rng, t0));
            f.Y = parse(detail::pick_flat_expr(rng, t0));
            f.Z = parse(detail::pick_root_expr(rng, t0));
            g.ms.form = std::move(f);
            g.branch = "product, dY/dt(t0) == 0";
            break;
        }
        case 2: {  // polynomial, first y-coefficient zero
            PolynomialForm f;
            std::size_t n = len_dist(rng);
            if (n < 2) n = 2;
            f.a1 = detail::pick_coeffs(rng, n, false);
            f.a2 = detail::pick_coeffs(rng, n, true);
            f.a3 = detail::pick_coeffs(rng, n, false);
            f.k = parse(detail::pick_s_expr(rng));
            f.m = parse(detail::pick_s_expr(rng));
            f.w = parse(detail::pick_s_expr(rng));
            f.X = parse(detail::pick_root_expr(rng, t0));
            f.Y = parse(detail::pick_root_expr(rng, t0));
            f.Z = parse(detail::pick_root_expr(rng, t0));
            g.ms.form = std::move(f);
            g.branch = "polynomial, a2_1 == 0";
            break;
        }
        case 3: {  // polynomial, m identically zero
            PolynomialForm f;
            std::size_t n = len_dist(rng);
            f.a1 = detail::pick_coeffs(rng, n, false);
            f.a2 = detail::pick_coeffs(rng, n, false);
            f.a3 = detail::pick_coeffs(rng, n, false);
            f.k = parse(detail::pick_s_expr(rng));
            f.m = parse("0");
            f.w = parse(detail::pick_s_expr(rng));
            f.X = parse(detail::pick_root_expr(rng, t0));
            f.Y = parse(detail::pick_root_expr(rng, t0));
            f.Z = parse(detail::pick_root_expr(rng, t0));
            g.ms.form = std::move(f);
            g.branch = "polynomial, m == 0";
            break;
        }
        case 4: {  // polynomial, Y with a double zero
            PolynomialForm f;
            std::size_t n = len_dist(rng);
            f.a1 = detail::pick_coeffs(rng, n, false);
            f.a2 = detail::pick_coeffs(rng, n, false);
            f.a3 = detail::pick_coeffs(rng, n, false);
            f.k = parse(detail::pick_s_expr(rng));
            f.m = parse(detail::pick_s_expr(rng));
            f.w = parse(detail::pick_s_expr(rng));
            f.X = parse(detail::pick_root_expr(rng, t0));
            f.Y = parse(detail::pick_flat_expr(rng, t0));
            f.Z = parse(detail::pick_root_expr(rng, t0));
            g.ms.form = std::move(f);
            g.branch = "polynomial, dY/dt(t0) == 0";
            break;
        }
        default: {  // composed, outer y-map with vanishing derivative at zero
            ComposedForm f;
            std::size_t n = len_dist(rng);
            f.core.a1 = detail::pick_coeffs(rng, n, false);
            f.core.a2 = detail::pick_coeffs(rng, n, false);
            f.core.a3 = detail::pick_coeffs(rng, n, false);
            f.core.k = parse(detail::pick_s_expr(rng));
            f.core.m = parse(detail::pick_s_expr(rng));
            f.core.w = parse(detail::pick_s_expr(rng));
            f.core.X = parse(detail::pick_root_expr(rng, t0));
            f.core.Y = parse(detail::pick_root_expr(rng, t0));
            f.core.Z = parse(detail::pick_root_expr(rng, t0));
            static const std::vector<std::string> outer = {"w", "2*w", "w + w^2", "w^3 + w"};
            static const std::vector<std::string> flat_outer = {"w^2", "w^3", "w^2 + w^4",
                                                                "1 - cos(w)"};
            f.f = parse(detail::pick(rng, outer));
            f.g = parse(detail::pick(rng, flat_outer));
            f.h = parse(detail::pick(rng, outer));
            g.ms.form = std::move(f);
            g.branch = "composed, dg/dw(0) == 0";
            break;
        }
    }
    return g;
}

}  // namespace formgen
