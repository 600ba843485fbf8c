#pragma once

#include <cmath>
#include <utility>

// Truncated jets for forward-mode differentiation. Dual1 carries a value and
// a first derivative, Dual2 additionally a second derivative, always with
// respect to one designated variable. The scalar type T may itself be a jet;
// nesting jets in a second variable yields mixed partials, nesting in the
// same variable yields higher orders. Every slot of a jet produced by these
// rules is exact, there are no truncation leftovers to ignore.

namespace nullsurf {

inline double value_of(double x) { return x; }

inline bool all_finite(double x) { return std::isfinite(x); }

template <class T>
struct Dual1 {
    T v{};  // value
    T d{};  // derivative

    Dual1() = default;
    Dual1(double c) : v(c), d(0.0) {}
    Dual1(T v, T d) : v(std::move(v)), d(std::move(d)) {}

    friend Dual1 operator+(const Dual1& a, const Dual1& b) { return {a.v + b.v, a.d + b.d}; }
    friend Dual1 operator-(const Dual1& a, const Dual1& b) { return {a.v - b.v, a.d - b.d}; }
    friend Dual1 operator-(const Dual1& a) { return {-a.v, -a.d}; }
    friend Dual1 operator*(const Dual1& a, const Dual1& b) {
        return {a.v * b.v, a.d * b.v + a.v * b.d};
    }
    friend Dual1 operator/(const Dual1& a, const Dual1& b) {
        T q = a.v / b.v;
        return {q, (a.d - q * b.d) / b.v};
    }

    friend Dual1 abs(const Dual1& x) { return value_of(x.v) < 0.0 ? -x : x; }

    friend Dual1 sin(const Dual1& x) {
        using std::cos;
        using std::sin;
        return {sin(x.v), cos(x.v) * x.d};
    }
    friend Dual1 cos(const Dual1& x) {
        using std::cos;
        using std::sin;
        return {cos(x.v), -(sin(x.v) * x.d)};
    }
    friend Dual1 tan(const Dual1& x) {
        using std::tan;
        T t = tan(x.v);
        return {t, (T(1.0) + t * t) * x.d};
    }
    friend Dual1 exp(const Dual1& x) {
        using std::exp;
        T e = exp(x.v);
        return {e, e * x.d};
    }
    friend Dual1 log(const Dual1& x) {
        using std::log;
        return {log(x.v), x.d / x.v};
    }
    friend Dual1 sqrt(const Dual1& x) {
        using std::sqrt;
        T r = sqrt(x.v);
        return {r, x.d / (r + r)};
    }
    friend Dual1 sinh(const Dual1& x) {
        using std::cosh;
        using std::sinh;
        return {sinh(x.v), cosh(x.v) * x.d};
    }
    friend Dual1 cosh(const Dual1& x) {
        using std::cosh;
        using std::sinh;
        return {cosh(x.v), sinh(x.v) * x.d};
    }
};

template <class T>
struct Dual2 {
    T v{};   // value
    T d1{};  // first derivative
    T d2{};  // second derivative

    Dual2() = default;
    Dual2(double c) : v(c), d1(0.0), d2(0.0) {}
    Dual2(T v, T d1, T d2) : v(std::move(v)), d1(std::move(d1)), d2(std::move(d2)) {}

    friend Dual2 operator+(const Dual2& a, const Dual2& b) {
        return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2};
    }
    friend Dual2 operator-(const Dual2& a, const Dual2& b) {
        return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2};
    }
    friend Dual2 operator-(const Dual2& a) { return {-a.v, -a.d1, -a.d2}; }
    friend Dual2 operator*(const Dual2& a, const Dual2& b) {
        T cross = a.d1 * b.d1;
        return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + cross + cross + a.v * b.d2};
    }
    friend Dual2 operator/(const Dual2& a, const Dual2& b) {
        // Solve a = q * b order by order.
        T q0 = a.v / b.v;
        T q1 = (a.d1 - q0 * b.d1) / b.v;
        T q2 = (a.d2 - (q1 * b.d1 + q1 * b.d1) - q0 * b.d2) / b.v;
        return {q0, q1, q2};
    }

    friend Dual2 abs(const Dual2& x) { return value_of(x.v) < 0.0 ? -x : x; }

    // Chain rule for f(x): {f, f'(x.v) x.d1, f''(x.v) x.d1^2 + f'(x.v) x.d2}.
    friend Dual2 sin(const Dual2& x) {
        using std::cos;
        using std::sin;
        T sv = sin(x.v), cv = cos(x.v);
        return {sv, cv * x.d1, cv * x.d2 - sv * (x.d1 * x.d1)};
    }
    friend Dual2 cos(const Dual2& x) {
        using std::cos;
        using std::sin;
        T sv = sin(x.v), cv = cos(x.v);
        return {cv, -(sv * x.d1), -(sv * x.d2) - cv * (x.d1 * x.d1)};
    }
    friend Dual2 tan(const Dual2& x) {
        using std::tan;
        T t = tan(x.v);
        T g = T(1.0) + t * t;
        return {t, g * x.d1, (t + t) * g * (x.d1 * x.d1) + g * x.d2};
    }
    friend Dual2 exp(const Dual2& x) {
        using std::exp;
        T e = exp(x.v);
        return {e, e * x.d1, e * (x.d1 * x.d1) + e * x.d2};
    }
    friend Dual2 log(const Dual2& x) {
        using std::log;
        return {log(x.v), x.d1 / x.v, x.d2 / x.v - (x.d1 * x.d1) / (x.v * x.v)};
    }
    friend Dual2 sqrt(const Dual2& x) {
        using std::sqrt;
        T r = sqrt(x.v);
        T r2 = r + r;
        return {r, x.d1 / r2, x.d2 / r2 - (x.d1 * x.d1) / (r2 * r2 * r)};
    }
    friend Dual2 sinh(const Dual2& x) {
        using std::cosh;
        using std::sinh;
        T sv = sinh(x.v), cv = cosh(x.v);
        return {sv, cv * x.d1, sv * (x.d1 * x.d1) + cv * x.d2};
    }
    friend Dual2 cosh(const Dual2& x) {
        using std::cosh;
        using std::sinh;
        T sv = sinh(x.v), cv = cosh(x.v);
        return {cv, sv * x.d1, cv * (x.d1 * x.d1) + sv * x.d2};
    }
};

template <class T>
double value_of(const Dual1<T>& x) {
    return value_of(x.v);
}
template <class T>
double value_of(const Dual2<T>& x) {
    return value_of(x.v);
}

template <class T>
bool all_finite(const Dual1<T>& x) {
    return all_finite(x.v) && all_finite(x.d);
}
template <class T>
bool all_finite(const Dual2<T>& x) {
    return all_finite(x.v) && all_finite(x.d1) && all_finite(x.d2);
}

// Seed helpers: var marks the differentiation variable, constants carry zero
// derivatives.
template <class T>
Dual1<T> d1_var(T x) {
    return {std::move(x), T(1.0)};
}
template <class T>
Dual1<T> d1_const(T x) {
    return {std::move(x), T(0.0)};
}
template <class T>
Dual2<T> d2_var(T x) {
    return {std::move(x), T(1.0), T(0.0)};
}
template <class T>
Dual2<T> d2_const(T x) {
    return {std::move(x), T(0.0), T(0.0)};
}

// Integer power by repeated squaring. Works for negative bases, unlike the
// exp/log route, and the derivative slots fall out of jet multiplication.
template <class T>
T powi(const T& base, long long n) {
    if (n < 0) return T(1.0) / powi(base, -n);
    T result(1.0);
    T b = base;
    unsigned long long m = static_cast<unsigned long long>(n);
    while (m != 0) {
        if (m & 1ull) result = result * b;
        m >>= 1;
        if (m != 0) b = b * b;
    }
    return result;
}

}  // namespace nullsurf
