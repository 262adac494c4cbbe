#pragma once

// 128-bit integer support shared by every module.
//
// Components of a quadruple can reach p^2 during descent on a prime p, so
// all arithmetic runs on signed 128-bit integers. Inputs that must be
// decomposed are capped at max_supported so every intermediate stays exact.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace foursq {

using integer = __int128;
using uinteger = unsigned __int128;

/// Largest value that four_squares and factorize accept.
inline constexpr integer max_supported = std::numeric_limits<std::int64_t>::max();

inline constexpr integer integer_max = static_cast<integer>(~uinteger{0} >> 1);

/// Raised when an input is beyond what the factorization or descent machinery
/// can handle exactly.
class capability_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Signed integers usable as quaternion components, including __int128
/// (which std::integral rejects in strict ISO mode).
template <class T>
concept exact_integer = (std::signed_integral<T> || std::same_as<T, __int128>) ||
                        requires(T x, T y) {
                            { x + y } -> std::convertible_to<T>;
                            { x * y } -> std::convertible_to<T>;
                            { x - y } -> std::convertible_to<T>;
                            { -x } -> std::convertible_to<T>;
                            T{0};
                        };

inline std::string to_string(integer v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    uinteger u = neg ? uinteger(0) - static_cast<uinteger>(v) : static_cast<uinteger>(v);
    std::string out;
    while (u != 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

/// Parses an optionally signed decimal literal. Returns nullopt on any
/// non-digit character, empty input, or overflow of the signed 128-bit range.
inline std::optional<integer> parse_integer(std::string_view text) {
    if (text.empty()) return std::nullopt;
    bool neg = false;
    if (text.front() == '-' || text.front() == '+') {
        neg = text.front() == '-';
        text.remove_prefix(1);
        if (text.empty()) return std::nullopt;
    }
    const uinteger limit = static_cast<uinteger>(integer_max) + (neg ? 1 : 0);
    uinteger acc = 0;
    for (char ch : text) {
        if (ch < '0' || ch > '9') return std::nullopt;
        const auto digit = static_cast<uinteger>(ch - '0');
        if (acc > (limit - digit) / 10) return std::nullopt;
        acc = acc * 10 + digit;
    }
    if (neg) return acc == limit ? -integer_max - 1 : -static_cast<integer>(acc);
    return static_cast<integer>(acc);
}

/// Floor of the square root, exact for all nonnegative 128-bit inputs.
inline integer isqrt(integer n) {
    if (n < 0) throw std::domain_error("isqrt of negative value");
    if (n < 2) return n;
    auto u = static_cast<uinteger>(n);
    uinteger x = static_cast<uinteger>(std::sqrt(static_cast<long double>(n)));
    while (x * x > u) --x;
    while ((x + 1) * (x + 1) <= u) ++x;
    return static_cast<integer>(x);
}

inline integer abs(integer v) { return v < 0 ? -v : v; }

}  // namespace foursq
