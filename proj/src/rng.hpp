#pragma once

#include "exact.hpp"

#include <cstdint>

namespace ptq {

// splitmix64: tiny, seed-stable across platforms and standard libraries,
// which keeps seeded reports byte-reproducible. Not for cryptography.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Inclusive range; modulo bias is irrelevant for test-point generation.
    long int_in(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Rational with numerator in [-max_num, max_num] and denominator from
    // {1, 2, 4, 8}; dyadic so double conversion is lossless.
    Rational dyadic(long max_num) {
        long num = int_in(-max_num, max_num);
        long den = 1L << int_in(0, 3);
        return make_rational(num, den);
    }

    Rational nonzero_dyadic(long max_num) {
        while (true) {
            Rational q = dyadic(max_num);
            if (sgn(q) != 0) return q;
        }
    }

    double dyadic_double(long max_num) { return dyadic(max_num).get_d(); }

private:
    std::uint64_t state_;
};

}  // namespace ptq
