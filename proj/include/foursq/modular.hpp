#pragma once

// Modular machinery: solving x^2 + y^2 + 1 = 0 (mod p), Chinese remaindering,
// centered residues, primality and factorization.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <random>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace foursq {

struct prime_power {
    integer prime;
    int exponent;

    friend bool operator==(const prime_power&, const prime_power&) = default;
};

/// Primes strictly increasing, exponents >= 1.
using prime_factorization = std::vector<prime_power>;

/// original = value + modulus * quotient with -modulus/2 < value <= modulus/2.
struct centered_residue {
    integer value;
    integer quotient;
    integer modulus;

    friend bool operator==(const centered_residue&, const centered_residue&) = default;
};

struct congruence {
    integer residue;
    integer modulus;
};

struct two_square_solution {
    integer x;
    integer y;

    friend bool operator==(const two_square_solution&, const two_square_solution&) = default;
};

struct factorize_options {
    /// Trial division covers every divisor up to this bound.
    std::uint64_t trial_bound = 1U << 12;
    /// Inputs above this are rejected with capability_error.
    integer max_value = max_supported;
    /// Seed for the Pollard-Brent parameters; the same seed gives the same run.
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
    /// Iteration budget for one Pollard-Brent attempt.
    std::uint64_t rho_iterations = 1U << 22;
    int rho_attempts = 16;
};

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<uinteger>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1U) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

/// Square root of a quadratic residue n modulo an odd prime p.
inline std::uint64_t sqrt_mod(std::uint64_t n, std::uint64_t p) {
    n %= p;
    if (n == 0) return 0;
    if (p % 4 == 3) return pow_mod(n, (p + 1) / 4, p);

    std::uint64_t q = p - 1;
    int s = 0;
    while ((q & 1U) == 0) {
        q >>= 1U;
        ++s;
    }
    std::uint64_t z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;

    std::uint64_t c = pow_mod(z, q, p);
    std::uint64_t r = pow_mod(n, (q + 1) / 2, p);
    std::uint64_t t = pow_mod(n, q, p);
    int m = s;
    while (t != 1) {
        int i = 0;
        for (std::uint64_t t2 = t; t2 != 1; t2 = mul_mod(t2, t2, p)) ++i;
        std::uint64_t b = c;
        for (int j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
        r = mul_mod(r, b, p);
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        m = i;
    }
    return r;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor or 0.
inline std::uint64_t pollard_brent(std::uint64_t n, std::uint64_t c, std::uint64_t y,
                                   std::uint64_t budget) {
    constexpr std::uint64_t batch = 128;
    auto step = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
    std::uint64_t g = 1;
    std::uint64_t q = 1;
    std::uint64_t x = y;
    std::uint64_t ys = y;
    std::uint64_t used = 0;
    for (std::uint64_t r = 1; g == 1; r <<= 1U) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) y = step(y);
        for (std::uint64_t k = 0; k < r && g == 1; k += batch) {
            ys = y;
            const std::uint64_t lim = std::min(batch, r - k);
            for (std::uint64_t i = 0; i < lim; ++i) {
                y = step(y);
                q = mul_mod(q, x > y ? x - y : y - x, n);
            }
            g = gcd(q, n);
            used += lim;
        }
        if (used > budget) return 0;
    }
    if (g == n) {
        // Batched gcd overshot; replay one step at a time.
        do {
            ys = step(ys);
            g = gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g == n ? 0 : g;
}

/// Deterministic Miller-Rabin, exact for every 64-bit input.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s && composite; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) composite = false;
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace detail

inline bool is_prime(integer n) {
    if (n < 0 || n > static_cast<integer>(std::numeric_limits<std::uint64_t>::max())) {
        throw capability_error("is_prime: input outside the 64-bit range");
    }
    return detail::is_prime_u64(static_cast<std::uint64_t>(n));
}

inline prime_factorization factorize(integer n, const factorize_options& opts = {}) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    if (n > opts.max_value || n > static_cast<integer>(std::numeric_limits<std::uint64_t>::max())) {
        throw capability_error("factorize: " + to_string(n) + " exceeds the supported range");
    }
    auto rest = static_cast<std::uint64_t>(n);
    std::map<std::uint64_t, int> found;

    for (std::uint64_t d = 2; d <= opts.trial_bound && d * d <= rest; d += (d == 2 ? 1 : 2)) {
        while (rest % d == 0) {
            ++found[d];
            rest /= d;
        }
    }

    std::mt19937_64 rng(opts.seed);
    std::vector<std::uint64_t> pending;
    if (rest > 1) pending.push_back(rest);
    while (!pending.empty()) {
        const std::uint64_t m = pending.back();
        pending.pop_back();
        if (detail::is_prime_u64(m)) {
            ++found[m];
            continue;
        }
        std::uint64_t factor = 0;
        for (int attempt = 0; attempt < opts.rho_attempts && factor == 0; ++attempt) {
            const std::uint64_t c = rng() % (m - 1) + 1;
            const std::uint64_t y = rng() % m;
            factor = detail::pollard_brent(m, c, y, opts.rho_iterations);
        }
        if (factor == 0) {
            throw capability_error("factorize: could not split " + to_string(m) +
                                   " within the iteration budget");
        }
        pending.push_back(factor);
        pending.push_back(m / factor);
    }

    prime_factorization out;
    out.reserve(found.size());
    for (const auto& [p, e] : found) out.push_back({static_cast<integer>(p), e});
    return out;
}

inline centered_residue reduce_centered(integer value, integer modulus) {
    if (modulus < 1) throw std::invalid_argument("reduce_centered: modulus must be >= 1");
    integer q = value / modulus;
    integer f = value - q * modulus;
    if (f < 0) {
        f += modulus;
        --q;
    }
    if (2 * f > modulus) {
        f -= modulus;
        ++q;
    }
    return {f, q, modulus};
}

/// Extended Euclid: returns g and sets s with a*s = g (mod b).
inline integer ext_gcd(integer a, integer b, integer& s) {
    integer old_r = a;
    integer r = b;
    integer old_s = 1;
    s = 0;
    while (r != 0) {
        const integer q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
    }
    s = old_s;
    return old_r;
}

/// Unique solution in [0, prod moduli) of pairwise coprime congruences.
inline integer crt(std::span<const congruence> system) {
    integer value = 0;
    integer modulus = 1;
    for (const auto& [res, mod] : system) {
        if (mod < 1) throw std::invalid_argument("crt: modulus must be >= 1");
        integer inv = 0;
        if (ext_gcd(modulus % mod, mod, inv) != 1) {
            throw std::invalid_argument("crt: moduli are not pairwise coprime");
        }
        // value + modulus * t = res (mod mod)
        const integer diff = reduce_centered(res - value, mod).value;
        integer t = diff * reduce_centered(inv, mod).value % mod;
        if (t < 0) t += mod;
        value += modulus * t;
        modulus *= mod;
    }
    return value;
}

inline integer crt(std::initializer_list<congruence> system) {
    return crt(std::span<const congruence>(system.begin(), system.size()));
}

/// Finds x, y in [0, (p-1)/2] with p | x^2 + y^2 + 1, taking the smallest y
/// and then the smallest x. For each y the candidates are the two square
/// roots of -(1 + y^2), so no scan over x is needed.
inline two_square_solution solve_two_square_minus_one(integer p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p)) {
        throw std::invalid_argument("solve_two_square_minus_one: " + to_string(p) +
                                    " is not an odd prime");
    }
    const auto pp = static_cast<std::uint64_t>(p);
    const std::uint64_t half = (pp - 1) / 2;
    for (std::uint64_t y = 0; y <= half; ++y) {
        const std::uint64_t rhs = (pp - (detail::mul_mod(y, y, pp) + 1) % pp) % pp;
        if (rhs != 0 && detail::pow_mod(rhs, half, pp) != 1) continue;
        const std::uint64_t r = detail::sqrt_mod(rhs, pp);
        const std::uint64_t x = r == 0 ? 0 : std::min(r, pp - r);
        return {static_cast<integer>(x), static_cast<integer>(y)};
    }
    throw std::logic_error("solve_two_square_minus_one: no solution for a prime modulus");
}

}  // namespace foursq
