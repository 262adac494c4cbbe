#pragma once

// Constructive four-square decomposition.
//
// Production path: factor n, run Euler's descent on each odd prime, and
// multiply the prime representations together. The matrix witness
// M[F] = M[L]^T * M[R] of the induction proof is available separately via
// witness(), and cofactor() builds on it.

#include <algorithm>
#include <array>
#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "modular.hpp"
#include "quaternion.hpp"

namespace foursq {

/// n together with a quad of norm n, canonical order a >= b >= c >= d >= 0.
struct decomposition {
    integer n{0};
    quad squares{};

    friend bool operator==(const decomposition&, const decomposition&) = default;
};

/// One step of the descent on a prime: norm(q) = multiplier * p, multiplier < p.
struct descent_state {
    integer p{0};
    integer multiplier{0};
    quad q{};

    friend bool operator==(const descent_state&, const descent_state&) = default;
};

/// norm(left) = m, norm(right) = A, and M[product] = M[left]^T * M[right].
struct witness_certificate {
    integer m{0};
    integer A{0};
    quad product{};
    quad left{};
    quad right{};
};

inline constexpr quad unit_quad{1, 0, 0, 0};

inline quad canonical(const quad& q) {
    std::array<integer, 4> v{abs(q.a), abs(q.b), abs(q.c), abs(q.d)};
    std::sort(v.begin(), v.end(), [](integer x, integer y) { return x > y; });
    return {v[0], v[1], v[2], v[3]};
}

inline quad divide_exact(const quad& q, integer m) {
    assert(q.a % m == 0 && q.b % m == 0 && q.c % m == 0 && q.d % m == 0);
    return {q.a / m, q.b / m, q.c / m, q.d / m};
}

/// Halves an even-norm quad: pairs components of equal parity (x, y) and
/// replaces each pair by ((x+y)/2, (x-y)/2). Pairing sorts by parity, then value.
inline quad halve(const quad& q) {
    std::array<integer, 4> v = q.components();
    if ((v[0] + v[1] + v[2] + v[3]) % 2 != 0) {
        throw std::invalid_argument("halve: norm " + to_string(norm(q)) + " is odd");
    }
    std::sort(v.begin(), v.end(), [](integer x, integer y) {
        const integer px = abs(x) % 2;
        const integer py = abs(y) % 2;
        return px != py ? px < py : x < y;
    });
    return {(v[0] + v[1]) / 2, (v[0] - v[1]) / 2, (v[2] + v[3]) / 2, (v[2] - v[3]) / 2};
}

inline decomposition halve(const decomposition& d) {
    if (d.n % 2 != 0) throw std::invalid_argument("halve: n = " + to_string(d.n) + " is odd");
    if (norm(d.squares) != d.n) throw std::invalid_argument("halve: quad does not have norm n");
    return {d.n / 2, canonical(halve(d.squares))};
}

namespace detail {

inline quad descend(integer p, std::vector<descent_state>* trace) {
    const auto [x, y] = solve_two_square_minus_one(p);
    quad q{x, y, 1, 0};
    integer m = norm(q) / p;
    if (trace) trace->push_back({p, m, q});
    while (m > 1) {
        if (m % 2 == 0) {
            q = halve(q);
            m /= 2;
        } else {
            const quad residues{reduce_centered(q.a, m).value, reduce_centered(q.b, m).value,
                                reduce_centered(q.c, m).value, reduce_centered(q.d, m).value};
            const integer next = norm(residues) / m;
            assert(norm(residues) % m == 0 && next < m && next > 0);
            q = divide_exact(quat_mul(q, conj(residues)), m);
            m = next;
        }
        assert(norm(q) == m * p);
        if (trace) trace->push_back({p, m, q});
    }
    return q;
}

// Some norm-2 quad h with h * q = 0 (mod 2) componentwise; exists whenever
// norm(q) is even.
inline quad norm_two_left_factor(const quad& q) {
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            for (integer sign : {integer{1}, integer{-1}}) {
                std::array<integer, 4> h{};
                h[i] = 1;
                h[j] = sign;
                const quad cand{h[0], h[1], h[2], h[3]};
                const quad prod = quat_mul(cand, q);
                if (prod.a % 2 == 0 && prod.b % 2 == 0 && prod.c % 2 == 0 && prod.d % 2 == 0) {
                    return cand;
                }
            }
        }
    }
    throw std::logic_error("norm_two_left_factor: no factor for an even-norm quad");
}

}  // namespace detail

/// Representation of an odd prime by Euler's descent.
inline decomposition prime_descent(integer p) { return {p, canonical(detail::descend(p, nullptr))}; }

/// Every intermediate state of the descent on p, starting from the solver's
/// x^2 + y^2 + 1 = m p and ending at multiplier 1.
inline std::vector<descent_state> trace_descent(integer p) {
    std::vector<descent_state> states;
    detail::descend(p, &states);
    return states;
}

inline decomposition four_squares(integer n, const factorize_options& opts = {}) {
    if (n < 0) throw std::invalid_argument("four_squares: n must be nonnegative");
    if (n > max_supported) {
        throw capability_error("four_squares: " + to_string(n) + " exceeds the supported range");
    }
    if (n == 0) return {0, {}};

    quad acc = unit_quad;
    integer scale = 1;
    for (const auto& [p, e] : factorize(n, opts)) {
        for (int i = 0; i < e / 2; ++i) scale *= p;
        if (e % 2 == 1) {
            const quad prime_quad = p == 2 ? quad{1, 1, 0, 0} : detail::descend(p, nullptr);
            acc = quat_mul(acc, prime_quad);
        }
    }
    return {n, canonical(scale * acc)};
}

/// Factors F = conj(L) * R with norm(L) = m, norm(R) = A.
///
/// Follows the induction on min(m, A):
///   - m = 1: L = 1, R = F.
///   - A = 0: F = 0 and L is any representation of m.
///   - A < m: solve for (A, m, conj F) and swap the factors.
///   - m even: write F = conj(h) G with norm(h) = 2, solve for (m/2, A, G),
///     then L = L' h.
///   - m odd, A >= m: F = f + m Q with centered residues f, norm(f) = m B,
///     B < m. Solve for (m, B, f) and lift with R = r + L Q.
inline witness_certificate witness(integer m, integer A, const quad& F) {
    if (m < 1 || A < 0) throw std::invalid_argument("witness: need m >= 1 and A >= 0");
    if (norm(F) != m * A) {
        throw std::invalid_argument("witness: norm(F) = " + to_string(norm(F)) + " but m*A = " +
                                    to_string(m * A));
    }

    enum class step { swap, peel_two, lift };
    struct frame {
        step kind;
        quad q;
    };
    std::vector<frame> frames;

    integer cur_m = m;
    integer cur_a = A;
    quad cur = F;
    quad left;
    quad right;
    for (;;) {
        if (cur_m == 1) {
            left = unit_quad;
            right = cur;
            break;
        }
        if (cur_a == 0) {
            left = four_squares(cur_m).squares;
            right = {};
            break;
        }
        if (cur_a < cur_m) {
            frames.push_back({step::swap, {}});
            std::swap(cur_m, cur_a);
            cur = conj(cur);
            continue;
        }
        if (cur_m % 2 == 0) {
            const quad h = detail::norm_two_left_factor(cur);
            frames.push_back({step::peel_two, h});
            cur = divide_exact(quat_mul(h, cur), 2);
            cur_m /= 2;
            continue;
        }
        const auto ra = reduce_centered(cur.a, cur_m);
        const auto rb = reduce_centered(cur.b, cur_m);
        const auto rc = reduce_centered(cur.c, cur_m);
        const auto rd = reduce_centered(cur.d, cur_m);
        frames.push_back({step::lift, {ra.quotient, rb.quotient, rc.quotient, rd.quotient}});
        cur = {ra.value, rb.value, rc.value, rd.value};
        assert(norm(cur) % cur_m == 0);
        cur_a = norm(cur) / cur_m;
        assert(cur_a < cur_m);
    }

    for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
        switch (it->kind) {
            case step::swap:
                std::swap(left, right);
                break;
            case step::peel_two:
                left = quat_mul(left, it->q);
                break;
            case step::lift:
                right += quat_mul(left, it->q);
                break;
        }
    }
    assert(transpose_product(left, right) == F);
    return {m, A, F, left, right};
}

/// True when the certificate's norms and factorization identity hold.
inline bool is_valid(const witness_certificate& w) {
    return norm(w.left) == w.m && norm(w.right) == w.A && norm(w.product) == w.m * w.A &&
           transpose_product(w.left, w.right) == w.product;
}

/// From representations of m and of m*A, a representation of A.
inline decomposition cofactor(const decomposition& m_dec, const decomposition& product_dec) {
    const integer m = norm(m_dec.squares);
    const integer total = norm(product_dec.squares);
    if (m < 1) throw std::invalid_argument("cofactor: m must be >= 1");
    if (total % m != 0) {
        throw std::invalid_argument("cofactor: " + to_string(m) + " does not divide " +
                                    to_string(total));
    }
    if (m == 1) return product_dec;
    const integer A = total / m;
    return {A, canonical(witness(m, A, product_dec.squares).right)};
}

/// Squarefree/CRT construction of the induction proof: for squarefree m,
/// solve F^2 + G^2 + 1 = 0 modulo each prime, recombine, and extract the
/// left factor of the witness for (m, A, (F, G, 1, 0)). Square factors are
/// pulled out as a scalar. Kept alongside four_squares as a second route.
inline decomposition four_squares_via_crt(integer n, const factorize_options& opts = {}) {
    if (n < 0) throw std::invalid_argument("four_squares_via_crt: n must be nonnegative");
    if (n > max_supported) {
        throw capability_error("four_squares_via_crt: " + to_string(n) +
                               " exceeds the supported range");
    }
    if (n == 0) return {0, {}};

    integer core = 1;
    integer scale = 1;
    std::vector<congruence> fs;
    std::vector<congruence> gs;
    for (const auto& [p, e] : factorize(n, opts)) {
        for (int i = 0; i < e / 2; ++i) scale *= p;
        if (e % 2 == 0) continue;
        core *= p;
        if (p == 2) {
            fs.push_back({1, 2});
            gs.push_back({0, 2});
        } else {
            const auto [x, y] = solve_two_square_minus_one(p);
            fs.push_back({x, p});
            gs.push_back({y, p});
        }
    }
    if (core == 1) return {n, {scale, 0, 0, 0}};

    const integer f = reduce_centered(crt(fs), core).value;
    const integer g = reduce_centered(crt(gs), core).value;
    const quad start{f, g, 1, 0};
    const integer A = norm(start) / core;
    const quad left = witness(core, A, start).left;
    return {n, canonical(scale * left)};
}

}  // namespace foursq
