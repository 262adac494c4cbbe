// Prints four-square decompositions for a range of integers and the descent
// trace of one prime.
//
//   decompose_range [first] [last]

#include <cstdlib>
#include <iostream>

#include "foursq/foursq.hpp"

int main(int argc, char** argv) {
    const long long first = argc > 1 ? std::atoll(argv[1]) : 1;
    const long long last = argc > 2 ? std::atoll(argv[2]) : 20;
    for (long long n = first; n <= last; ++n) {
        const auto d = foursq::four_squares(n);
        std::cout << n << " = " << d.squares << '\n';
    }

    std::cout << "\ndescent on 1000003:\n";
    for (const auto& state : foursq::trace_descent(1000003)) {
        std::cout << "  m=" << foursq::to_string(state.multiplier) << " quad=" << state.q << '\n';
    }
}
