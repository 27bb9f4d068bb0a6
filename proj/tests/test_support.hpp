#pragma once

#include "moran/rational.hpp"
#include "moran/rational_gf.hpp"

#include <random>
#include <vector>

namespace moran::test {

inline Rational R(long num, long den = 1) { return make_rational(num, den); }

inline Rational random_rational(std::mt19937& gen, int span = 9) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, span);
    return make_rational(num(gen), den(gen));
}

inline Polynomial random_polynomial(std::mt19937& gen, std::size_t max_len = 5) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::vector<Rational> c(len(gen));
    for (auto& x : c) x = random_rational(gen);
    return Polynomial(std::move(c));
}

/// The grid used by the p-sweep properties: p_i = (7 + 6i)/140, i = 1..20,
/// twenty points inside (0.05, 0.95).
inline std::vector<Rational> p_grid() {
    std::vector<Rational> g;
    for (long i = 1; i <= 20; ++i) g.push_back(make_rational(7 + 6 * i, 140));
    return g;
}

}  // namespace moran::test
