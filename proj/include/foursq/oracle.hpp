#pragma once

// Naive reference implementations for tests. Nothing here calls into the
// production modules; only the plain data types are shared.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>
#include <stdexcept>

#include "decompose.hpp"

namespace foursq::oracle {

using matrix = std::array<std::array<integer, 4>, 4>;

inline matrix matrix_mul(const matrix& lhs, const matrix& rhs) {
    matrix out{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) out[i][j] += lhs[i][k] * rhs[k][j];
    return out;
}

inline matrix transpose(const matrix& m) {
    matrix out{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i][j] = m[j][i];
    return out;
}

inline matrix scalar_identity(integer s) {
    matrix out{};
    for (int i = 0; i < 4; ++i) out[i][i] = s;
    return out;
}

/// Lexicographically greatest a >= b >= c >= d >= 0 with a^2+b^2+c^2+d^2 = n.
inline decomposition brute_four_squares(std::int64_t n) {
    if (n < 0 || n > 1'000'000) throw std::out_of_range("brute_four_squares: n outside [0, 10^6]");
    std::int64_t top = 0;
    while ((top + 1) * (top + 1) <= n) ++top;
    for (std::int64_t a = top; a >= 0; --a)
        for (std::int64_t b = a; b >= 0; --b)
            for (std::int64_t c = b; c >= 0; --c)
                for (std::int64_t d = c; d >= 0; --d)
                    if (a * a + b * b + c * c + d * d == n) return {n, {a, b, c, d}};
    throw std::logic_error("brute_four_squares: no representation found");
}

/// Smallest y, then smallest x, in [0, (p-1)/2] with p | x^2 + y^2 + 1.
inline std::optional<std::array<std::int64_t, 2>> brute_solve_two_square_minus_one(std::int64_t p) {
    if (p < 3 || p % 2 == 0 || p >= 10'000) {
        throw std::out_of_range("brute_solve_two_square_minus_one: need odd 3 <= p < 10^4");
    }
    const std::int64_t half = (p - 1) / 2;
    for (std::int64_t y = 0; y <= half; ++y)
        for (std::int64_t x = 0; x <= half; ++x)
            if ((x * x + y * y + 1) % p == 0) return std::array<std::int64_t, 2>{x, y};
    return std::nullopt;
}

/// Sieve of Eratosthenes, for independent prime enumeration in tests.
inline std::vector<std::int64_t> primes_below(std::int64_t limit) {
    std::vector<bool> composite(static_cast<std::size_t>(std::max<std::int64_t>(limit, 2)), false);
    std::vector<std::int64_t> out;
    for (std::int64_t i = 2; i < limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::int64_t j = i * i; j < limit; j += i) composite[j] = true;
    }
    return out;
}

}  // namespace foursq::oracle
