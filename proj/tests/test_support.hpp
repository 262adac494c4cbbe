#pragma once

#include <cstdint>
#include <ostream>
#include <random>

#include "foursq/foursq.hpp"
#include "foursq/oracle.hpp"

namespace foursq {

inline void PrintTo(const quad& q, std::ostream* os) { *os << q; }

}  // namespace foursq

namespace foursq::testing {

inline quad random_quad(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> dist(lo, hi);
    return {dist(rng), dist(rng), dist(rng), dist(rng)};
}

inline oracle::matrix as_oracle_matrix(const matrix4<integer>& m) { return m; }

/// M[F] == M[L]^T * M[R], evaluated with the oracle's schoolbook multiply.
inline bool oracle_relation(const quad& F, const quad& L, const quad& R) {
    return oracle::matrix_mul(oracle::transpose(matrix_of(L)), matrix_of(R)) == matrix_of(F);
}

}  // namespace foursq::testing
