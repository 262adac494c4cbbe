#pragma once

// Exact Lipschitz quaternion arithmetic.
//
// A quad (a,b,c,d) is identified with the 4x4 integer matrix
//
//     M[a,b,c,d] = |  a  b  c  d |
//                  | -b  a  d -c |
//                  | -c -d  a  b |
//                  | -d  c -b  a |
//
// Conventions (all checked against explicit matrix products in the tests):
//   * quat_mul(p, q) is the product with M[quat_mul(p,q)] = M[p] * M[q].
//     It is associative with unit (1,0,0,0); in Hamilton's basis it is the
//     opposite product q*p.
//   * M[conj(q)] = M[q]^T.
//   * euler_product(p, q) is the classical four-square identity
//         f = ax+by+cz+dv    g = bx-ay-dz+cv
//         h = cx+dy-az-bv    k = dx-cy+bz-av
//     and equals quat_mul(p, conj(q)).
//   * transpose_product(p, q) realizes M[p]^T * M[q] = M[conj(p)] * M[q]
//     and equals quat_mul(conj(p), q).

#include <array>
#include <ostream>

#include "integer.hpp"

namespace foursq {

template <exact_integer T>
struct basic_quad {
    T a{0};
    T b{0};
    T c{0};
    T d{0};

    friend bool operator==(const basic_quad&, const basic_quad&) = default;

    constexpr basic_quad& operator+=(const basic_quad& o) {
        a += o.a;
        b += o.b;
        c += o.c;
        d += o.d;
        return *this;
    }
    friend constexpr basic_quad operator+(basic_quad lhs, const basic_quad& rhs) { return lhs += rhs; }
    friend constexpr basic_quad operator-(const basic_quad& q) { return {-q.a, -q.b, -q.c, -q.d}; }
    friend constexpr basic_quad operator*(const T& s, const basic_quad& q) {
        return {s * q.a, s * q.b, s * q.c, s * q.d};
    }

    constexpr std::array<T, 4> components() const { return {a, b, c, d}; }
};

using quad = basic_quad<integer>;

template <exact_integer T>
using matrix4 = std::array<std::array<T, 4>, 4>;

template <exact_integer T>
constexpr T norm(const basic_quad<T>& q) {
    return q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d;
}

template <exact_integer T>
constexpr basic_quad<T> conj(const basic_quad<T>& q) {
    return {q.a, -q.b, -q.c, -q.d};
}

/// Product realizing M[p] * M[q].
template <exact_integer T>
constexpr basic_quad<T> quat_mul(const basic_quad<T>& p, const basic_quad<T>& q) {
    const auto& [a, b, c, d] = p;
    const auto& [x, y, z, v] = q;
    return {
        a * x - b * y - c * z - d * v,
        a * y + b * x - c * v + d * z,
        a * z + b * v + c * x - d * y,
        a * v - b * z + c * y + d * x,
    };
}

/// Euler's four-square product formula, component for component.
template <exact_integer T>
constexpr basic_quad<T> euler_product(const basic_quad<T>& p, const basic_quad<T>& q) {
    const auto& [a, b, c, d] = p;
    const auto& [x, y, z, v] = q;
    return {
        a * x + b * y + c * z + d * v,
        b * x - a * y - d * z + c * v,
        c * x + d * y - a * z - b * v,
        d * x - c * y + b * z - a * v,
    };
}

/// First row of M[p]^T * M[q]; the full product is again an M-matrix.
template <exact_integer T>
constexpr basic_quad<T> transpose_product(const basic_quad<T>& p, const basic_quad<T>& q) {
    const auto& [a, b, c, d] = p;
    const auto& [f, g, h, k] = q;
    return {
        a * f + b * g + c * h + d * k,
        a * g - b * f + c * k - d * h,
        a * h - b * k - c * f + d * g,
        a * k + b * h - c * g - d * f,
    };
}

template <exact_integer T>
constexpr matrix4<T> matrix_of(const basic_quad<T>& q) {
    const auto& [a, b, c, d] = q;
    return {{
        {a, b, c, d},
        {-b, a, d, -c},
        {-c, -d, a, b},
        {-d, c, -b, a},
    }};
}

inline std::ostream& operator<<(std::ostream& os, const quad& q) {
    return os << '(' << to_string(q.a) << ',' << to_string(q.b) << ',' << to_string(q.c) << ','
              << to_string(q.d) << ')';
}

}  // namespace foursq
