#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "test_support.hpp"

namespace foursq {
namespace {

TEST(Modular, SolverSmallPrimes) {
    EXPECT_EQ(solve_two_square_minus_one(3), (two_square_solution{1, 1}));
    EXPECT_EQ(solve_two_square_minus_one(5), (two_square_solution{2, 0}));
    EXPECT_EQ(solve_two_square_minus_one(7), (two_square_solution{3, 2}));
    EXPECT_EQ(solve_two_square_minus_one(11), (two_square_solution{3, 1}));
    EXPECT_EQ(solve_two_square_minus_one(9973), (two_square_solution{2798, 0}));
}

TEST(Modular, SolverRejectsNonPrimes) {
    EXPECT_THROW(solve_two_square_minus_one(9), std::invalid_argument);
    EXPECT_THROW(solve_two_square_minus_one(2), std::invalid_argument);
    EXPECT_THROW(solve_two_square_minus_one(1), std::invalid_argument);
    EXPECT_THROW(solve_two_square_minus_one(3215031751), std::invalid_argument);
}

TEST(Modular, SolverAgreesWithBruteForce) {
    for (std::int64_t p : oracle::primes_below(10'000)) {
        if (p == 2) continue;
        const auto expected = oracle::brute_solve_two_square_minus_one(p);
        ASSERT_TRUE(expected.has_value()) << p;
        const auto [x, y] = solve_two_square_minus_one(p);
        ASSERT_EQ(x, (*expected)[0]) << p;
        ASSERT_EQ(y, (*expected)[1]) << p;
    }
}

TEST(Modular, SolverLargePrimes) {
    for (integer p : {integer{1000000007}, integer{2305843009213693951}, integer{9223372036854775783}}) {
        const auto [x, y] = solve_two_square_minus_one(p);
        EXPECT_GE(x, 0);
        EXPECT_GE(y, 0);
        EXPECT_LE(2 * x, p - 1);
        EXPECT_LE(2 * y, p - 1);
        EXPECT_EQ((x * x + y * y + 1) % p, 0);
    }
}

TEST(Modular, Crt) {
    EXPECT_EQ(crt({{1, 3}, {2, 5}}), 7);
    EXPECT_EQ(crt({{0, 17}}), 0);
    EXPECT_EQ(crt({{1, 2}, {1, 3}, {1, 5}}), 1);
    EXPECT_EQ(crt({{-1, 7}, {12, 11}}), 34);
    EXPECT_THROW(crt({{1, 4}, {3, 6}}), std::invalid_argument);
    EXPECT_THROW(crt({{1, 0}}), std::invalid_argument);
}

TEST(Modular, CrtRandomSystems) {
    std::mt19937_64 rng(7);
    const auto primes = oracle::primes_below(2000);
    std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<congruence> system;
        std::vector<std::int64_t> used;
        integer product = 1;
        for (int k = 0; k < 4; ++k) {
            const std::int64_t p = primes[pick(rng)];
            if (std::find(used.begin(), used.end(), p) != used.end()) continue;
            used.push_back(p);
            system.push_back({static_cast<integer>(rng() % 100000), p});
            product *= p;
        }
        const integer v = crt(system);
        ASSERT_GE(v, 0);
        ASSERT_LT(v, product);
        for (const auto& [res, mod] : system) ASSERT_EQ(v % mod, res % mod);
    }
}

TEST(Modular, CenteredResidue) {
    EXPECT_EQ(reduce_centered(7, 3), (centered_residue{1, 2, 3}));
    EXPECT_EQ(reduce_centered(5, 2), (centered_residue{1, 2, 2}));
    EXPECT_EQ(reduce_centered(0, 9), (centered_residue{0, 0, 9}));
    EXPECT_EQ(reduce_centered(-5, 2), (centered_residue{1, -3, 2}));
    EXPECT_EQ(reduce_centered(2, 4), (centered_residue{2, 0, 4}));
    EXPECT_EQ(reduce_centered(-2, 4), (centered_residue{2, -1, 4}));
    EXPECT_EQ(reduce_centered(-7, 1), (centered_residue{0, -7, 1}));
    EXPECT_THROW(reduce_centered(3, 0), std::invalid_argument);
}

TEST(Modular, CenteredResidueRoundTrip) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> values(-1'000'000'000, 1'000'000'000);
    std::uniform_int_distribution<std::int64_t> moduli(1, 100'000);
    for (int i = 0; i < 100'000; ++i) {
        const integer F = values(rng);
        const integer m = moduli(rng);
        const auto r = reduce_centered(F, m);
        ASSERT_EQ(r.value + m * r.quotient, F);
        ASSERT_LT(-m, 2 * r.value);
        ASSERT_LE(2 * r.value, m);
    }
}

TEST(Modular, IsPrime) {
    EXPECT_FALSE(is_prime(0));
    EXPECT_FALSE(is_prime(1));
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(641));
    EXPECT_FALSE(is_prime(12));
    EXPECT_FALSE(is_prime(3215031751));
    EXPECT_TRUE(is_prime(2305843009213693951));
    EXPECT_TRUE(is_prime(9223372036854775783));

    const auto primes = oracle::primes_below(100'000);
    std::size_t idx = 0;
    for (std::int64_t n = 0; n < 100'000; ++n) {
        const bool expected = idx < primes.size() && primes[idx] == n;
        if (expected) ++idx;
        ASSERT_EQ(is_prime(n), expected) << n;
    }
}

TEST(Modular, Factorize) {
    EXPECT_TRUE(factorize(1).empty());
    EXPECT_EQ(factorize(60), (prime_factorization{{2, 2}, {3, 1}, {5, 1}}));
    EXPECT_EQ(factorize((integer{1} << 32) + 1), (prime_factorization{{641, 1}, {6700417, 1}}));
    EXPECT_EQ(factorize(integer{3037000493} * 3037000453),
              (prime_factorization{{3037000453, 1}, {3037000493, 1}}));
    EXPECT_EQ(factorize(integer{1000003} * 1000003 * 1000003),
              (prime_factorization{{1000003, 3}}));
    EXPECT_THROW(factorize(0), std::invalid_argument);
    EXPECT_THROW(factorize(max_supported + 1), capability_error);
}

TEST(Modular, FactorizeRespectsConfiguredLimit) {
    factorize_options opts;
    opts.max_value = 1000;
    EXPECT_NO_THROW(factorize(1000, opts));
    EXPECT_THROW(factorize(1001, opts), capability_error);
}

TEST(Modular, FactorizeRecomposes) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> dist(1, std::numeric_limits<std::int64_t>::max());
    for (int i = 0; i < 300; ++i) {
        const integer n = i < 100 ? integer(i + 1) : integer(dist(rng));
        const auto f = factorize(n);
        integer product = 1;
        integer previous = 1;
        for (const auto& [p, e] : f) {
            ASSERT_GT(p, previous);
            ASSERT_GE(e, 1);
            ASSERT_TRUE(is_prime(p));
            for (int k = 0; k < e; ++k) product *= p;
            previous = p;
        }
        ASSERT_EQ(product, n);
    }
}

TEST(Modular, FactorizeIsDeterministic) {
    const integer n = integer{3037000493} * 3037000453;
    EXPECT_EQ(factorize(n), factorize(n));
}

TEST(Modular, ParseAndPrint) {
    EXPECT_EQ(parse_integer("0"), integer{0});
    EXPECT_EQ(parse_integer("-42"), integer{-42});
    EXPECT_EQ(parse_integer("+7"), integer{7});
    EXPECT_FALSE(parse_integer("").has_value());
    EXPECT_FALSE(parse_integer("12a").has_value());
    EXPECT_FALSE(parse_integer("-").has_value());
    EXPECT_FALSE(parse_integer("170141183460469231731687303715884105728").has_value());
    EXPECT_EQ(to_string(*parse_integer("170141183460469231731687303715884105727")),
              "170141183460469231731687303715884105727");
    EXPECT_EQ(to_string(*parse_integer("-170141183460469231731687303715884105728")),
              "-170141183460469231731687303715884105728");
    EXPECT_EQ(isqrt(integer{1} << 126), integer{1} << 63);
    EXPECT_EQ(isqrt(99), 9);
}

}  // namespace
}  // namespace foursq
