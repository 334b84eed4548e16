#ifndef LEIB_TESTS_HELPERS_HPP
#define LEIB_TESTS_HELPERS_HPP

#include <random>

#include "leib/algebra.hpp"
#include "leib/linalg.hpp"

namespace leibtest {

using namespace leib;

/// Deterministic generator for tests; raw mersenne output, no distributions.
struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t seed) : g(seed) {}
    std::uint64_t next(std::uint64_t bound) { return g() % bound; }
    long long next_int(long long lo, long long hi) { // inclusive
        return lo + static_cast<long long>(g() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

inline Scalar random_scalar(Rng &rng, const FieldSpec &f) {
    if (f.is_prime_field()) return Scalar::residue(f, rng.next_int(0, f.prime() - 1));
    long long num = rng.next_int(-6, 6);
    long long den = rng.next_int(1, 4);
    return Scalar::rational(Rat(BigInt(num), BigInt(den)));
}

inline Scalar random_nonzero_scalar(Rng &rng, const FieldSpec &f) {
    for (;;) {
        Scalar s = random_scalar(rng, f);
        if (!s.is_zero()) return s;
    }
}

inline Vec random_vec(Rng &rng, const FieldSpec &f, std::size_t n) {
    Vec v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(rng, f));
    return v;
}

inline Matrix random_matrix(Rng &rng, const FieldSpec &f, std::size_t rows, std::size_t cols) {
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = random_scalar(rng, f);
    return m;
}

/// Example 2: basis (a, a^2), a*a = a^2, a^2*a = a^2.
inline LeibnizAlgebra example2(const FieldSpec &f) {
    Scalar one = Scalar::one(f);
    return LeibnizAlgebra::make(f, {"a", "a2"},
                                {{0, 0, {{1, one}}}, {1, 0, {{1, one}}}});
}

/// Nilpotent cyclic dim 2: a*a = a^2, a^2*a = 0.
inline LeibnizAlgebra nilcyclic2(const FieldSpec &f) {
    Scalar one = Scalar::one(f);
    return LeibnizAlgebra::make(f, {"a", "a2"}, {{0, 0, {{1, one}}}});
}

} // namespace leibtest

#endif
