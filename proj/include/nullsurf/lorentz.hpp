#pragma once

#include <cmath>

#include "nullsurf/dual.hpp"

// Vector algebra of Minkowski 3-space with metric signature (-,+,+).
// Component 0 is the timelike direction.

namespace nullsurf {

template <class T>
struct Vec3 {
    T c0{}, c1{}, c2{};
};

using MVec3 = Vec3<double>;

template <class T>
Vec3<T> operator+(const Vec3<T>& a, const Vec3<T>& b) {
    return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2};
}
template <class T>
Vec3<T> operator-(const Vec3<T>& a, const Vec3<T>& b) {
    return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2};
}
template <class T>
Vec3<T> operator-(const Vec3<T>& a) {
    return {-a.c0, -a.c1, -a.c2};
}
template <class T>
Vec3<T> operator*(const T& k, const Vec3<T>& a) {
    return {k * a.c0, k * a.c1, k * a.c2};
}
template <class T>
Vec3<T> operator*(const Vec3<T>& a, const T& k) {
    return k * a;
}
template <class T>
Vec3<T> operator/(const Vec3<T>& a, const T& k) {
    return {a.c0 / k, a.c1 / k, a.c2 / k};
}

// <a,b> = -a0 b0 + a1 b1 + a2 b2.
template <class T>
T minkowski_inner(const Vec3<T>& a, const Vec3<T>& b) {
    return -(a.c0 * b.c0) + a.c1 * b.c1 + a.c2 * b.c2;
}

// Lorentzian cross product. Antisymmetric, and <a x b, a> = <a x b, b> = 0.
template <class T>
Vec3<T> lorentz_cross(const Vec3<T>& a, const Vec3<T>& b) {
    return {a.c2 * b.c1 - a.c1 * b.c2,
            a.c2 * b.c0 - a.c0 * b.c2,
            a.c0 * b.c1 - a.c1 * b.c0};
}

// sqrt(|<v,v>|). Zero for null vectors regardless of their size.
template <class T>
T pseudo_norm(const Vec3<T>& v) {
    using std::abs;
    using std::sqrt;
    return sqrt(abs(minkowski_inner(v, v)));
}

// Componentwise magnitude; this is what degeneracy detection has to use,
// since the pseudo-norm of a large null vector reads zero.
template <class T>
T euclidean_norm(const Vec3<T>& v) {
    using std::sqrt;
    return sqrt(v.c0 * v.c0 + v.c1 * v.c1 + v.c2 * v.c2);
}

inline double det3(const MVec3& a, const MVec3& b, const MVec3& c) {
    return a.c0 * (b.c1 * c.c2 - b.c2 * c.c1) - a.c1 * (b.c0 * c.c2 - b.c2 * c.c0) +
           a.c2 * (b.c0 * c.c1 - b.c1 * c.c0);
}

template <class T>
bool all_finite(const Vec3<T>& v) {
    return all_finite(v.c0) && all_finite(v.c1) && all_finite(v.c2);
}

template <class T>
double value_c0(const Vec3<T>& v) {
    return value_of(v.c0);
}

// Values part of a jet-valued vector.
template <class T>
Vec3<T> jet_values(const Vec3<Dual1<T>>& v) {
    return {v.c0.v, v.c1.v, v.c2.v};
}
template <class T>
Vec3<T> jet_derivs(const Vec3<Dual1<T>>& v) {
    return {v.c0.d, v.c1.d, v.c2.d};
}

enum class CausalCharacter { Timelike, Spacelike, Null };

// Classification of <v,v> against an absolute tolerance around zero.
inline CausalCharacter causal_character(const MVec3& v, double eps_null) {
    double q = minkowski_inner(v, v);
    if (std::abs(q) <= eps_null) return CausalCharacter::Null;
    return q < 0.0 ? CausalCharacter::Timelike : CausalCharacter::Spacelike;
}

inline const char* to_string(CausalCharacter c) {
    switch (c) {
        case CausalCharacter::Timelike: return "timelike";
        case CausalCharacter::Spacelike: return "spacelike";
        case CausalCharacter::Null: return "null";
    }
    return "?";
}

}  // namespace nullsurf
