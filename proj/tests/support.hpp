#pragma once

#include "fockjordan/operators.hpp"

#include <random>

namespace testing_support {

/// Nonzero rational p/q with |p| <= 12, 1 <= q <= 7.
inline fockjordan::Rational random_nonzero_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(1, 12);
    std::uniform_int_distribution<int> den(1, 7);
    std::bernoulli_distribution negative(0.5);
    fockjordan::Rational r(negative(rng) ? -num(rng) : num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline fockjordan::Couplings random_couplings(int ell, std::mt19937_64& rng) {
    std::vector<fockjordan::Rational> values;
    for (int k = 1; k < ell; ++k) values.push_back(random_nonzero_rational(rng));
    return fockjordan::Couplings(std::move(values));
}

} // namespace testing_support
