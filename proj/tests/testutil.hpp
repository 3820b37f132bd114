// Shared helpers for the doctest suites: a deterministic RNG and random
// exact values, so property tests are reproducible byte for byte.
#ifndef QDE_TESTUTIL_HPP
#define QDE_TESTUTIL_HPP

#include <qde/linalg.hpp>

#include <cstdint>

namespace qde::testutil {

// splitmix64: tiny deterministic generator, seed-stable across platforms
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) { // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

inline Rat rand_rat(Rng& rng) {
    long num = rng.range(-9, 9);
    long den = rng.range(1, 7);
    return rat_from(num, den);
}

inline QPoly rand_poly(Rng& rng, int max_deg) {
    std::vector<Rat> c;
    int d = static_cast<int>(rng.range(0, max_deg));
    for (int i = 0; i <= d; ++i) c.push_back(rand_rat(rng));
    return QPoly(std::move(c));
}

inline RatFunc rand_ratfunc(Rng& rng, int max_deg = 3) {
    QPoly num = rand_poly(rng, max_deg);
    QPoly den;
    do {
        den = rand_poly(rng, max_deg);
    } while (den.is_zero_poly());
    return RatFunc(num, den);
}

inline Matrix<RatFunc> rand_matrix(Rng& rng, int rows, int cols, int max_deg = 2) {
    Matrix<RatFunc> m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (rng.range(0, 2) != 0) m.set(i, j, rand_ratfunc(rng, max_deg));
    return m;
}

} // namespace qde::testutil

#endif
