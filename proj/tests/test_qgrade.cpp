#include "fockjordan/errors.hpp"
#include "fockjordan/fock.hpp"
#include "fockjordan/qgrade.hpp"

#include "oracles/oracles.hpp"

#include <doctest.h>

#include <thread>

using namespace fockjordan;

namespace {

QPolynomial poly(std::initializer_list<long> coeffs) {
    std::vector<BigInt> c;
    for (long v : coeffs) c.emplace_back(v);
    return QPolynomial(std::move(c));
}

BigInt binomial(int n, int k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace

TEST_CASE("q_bracket") {
    CHECK(q_bracket(1) == QPolynomial::one());
    CHECK(q_bracket(2) == poly({1, 1}));
    CHECK(q_bracket(3) == poly({1, 1, 1}));
    CHECK_THROWS_AS(q_bracket(0), DomainError);
}

TEST_CASE("q_factorial") {
    CHECK(q_factorial(0) == QPolynomial::one());
    CHECK(q_factorial(2) == poly({1, 1}));
    CHECK(q_factorial(3) == poly({1, 2, 2, 1}));
}

TEST_CASE("q_binomial: worked values") {
    CHECK(q_binomial(6, 3) == poly({1, 1, 2, 3, 3, 3, 3, 2, 1, 1}));
    CHECK(q_binomial(5, 0) == QPolynomial::one());
    CHECK(q_binomial(4, 2) == poly({1, 1, 2, 1, 1}));
    CHECK(q_binomial(5, 2) == poly({1, 1, 2, 2, 2, 1, 1}));
    CHECK(q_binomial(0, 0) == QPolynomial::one());
    CHECK_THROWS_AS(q_binomial(4, 5), DomainError);
    CHECK_THROWS_AS(q_binomial(4, -1), DomainError);
}

TEST_CASE("QPolynomial formatting") {
    CHECK(q_binomial(6, 3).to_string() == "1 + q + 2q^2 + 3q^3 + 3q^4 + 3q^5 + 3q^6 + 2q^7 + q^8 + q^9");
    CHECK(q_binomial(5, 5).to_string() == "1");
    CHECK(QPolynomial().to_string() == "0");
    CHECK(poly({0, 0, 4}).to_string() == "4q^2");
    CHECK(poly({1, 0, 0}).degree() == 0);
}

TEST_CASE("q_binomial invariants") {
    for (int ell = 0; ell <= 20; ++ell) {
        for (int m = 0; m <= ell; ++m) {
            CAPTURE(ell);
            CAPTURE(m);
            const QPolynomial p = q_binomial(ell, m);
            CHECK(p.degree() == m * (ell - m));
            CHECK(p.is_palindromic());
            CHECK(p.evaluate_at_one() == binomial(ell, m));
            bool positive = true;
            for (const auto& c : p.coefficients()) positive = positive && c > 0;
            CHECK(positive);
        }
    }
}

TEST_CASE("q_binomial matches the factorial quotient") {
    for (int ell = 0; ell <= 12; ++ell) {
        for (int m = 0; m <= ell; ++m) {
            CAPTURE(ell);
            CAPTURE(m);
            const QPolynomial p = q_binomial(ell, m);
            CHECK(q_factorial(ell) == p * q_factorial(m) * q_factorial(ell - m));
            CHECK(p.coefficients() == oracle::q_binomial_by_quotient(ell, m));
        }
    }
}

TEST_CASE("q_binomial coefficients count weighted Fock states") {
    for (int ell = 1; ell <= 14; ++ell) {
        for (int m = 0; m <= ell; ++m) {
            const auto dims = sector_weight_dimensions(enumerate_sector(ell, m));
            const QPolynomial poly = q_binomial(ell, m);
            const auto& coeffs = poly.coefficients();
            REQUIRE(coeffs.size() == dims.size());
            for (std::size_t r = 0; r < dims.size(); ++r) CHECK(coeffs[r] == dims[r]);
        }
    }
}

TEST_CASE("q_binomial stays exact beyond 64-bit coefficients") {
    const QPolynomial p = q_binomial(80, 40);
    CHECK(p.evaluate_at_one() == binomial(80, 40));
    CHECK_FALSE(p.coefficients()[800].fits_ulong_p());
}

TEST_CASE("q_binomial memo is safe under concurrent use") {
    std::vector<QPolynomial> results(4);
    {
        std::vector<std::jthread> threads;
        for (std::size_t t = 0; t < results.size(); ++t) {
            threads.emplace_back([&results, t] { results[t] = q_binomial(40, 17); });
        }
    }
    for (const auto& r : results) CHECK(r == results.front());
    CHECK(results.front().evaluate_at_one() == binomial(40, 17));
}

TEST_CASE("predict_increments") {
    CHECK(predict_increments(6, 3) == std::vector<std::size_t>{3, 3, 3, 3, 2, 2, 1, 1, 1, 1});
    CHECK(predict_increments(4, 2) == std::vector<std::size_t>{2, 1, 1, 1, 1});
    CHECK(predict_increments(3, 0) == std::vector<std::size_t>{1});
}

TEST_CASE("predict_blocks") {
    CHECK(predict_blocks(6, 3).multiplicities == std::map<std::size_t, std::size_t>{{4, 1}, {6, 1}, {10, 1}});
    CHECK(predict_blocks(4, 2).multiplicities == std::map<std::size_t, std::size_t>{{1, 1}, {5, 1}});
    CHECK(predict_blocks(5, 2).multiplicities == std::map<std::size_t, std::size_t>{{3, 1}, {7, 1}});
    CHECK(predict_blocks(3, 3).multiplicities == std::map<std::size_t, std::size_t>{{1, 1}});
}

TEST_CASE("block prediction invariants for every ell <= 14") {
    for (int ell = 1; ell <= 14; ++ell) {
        for (int m = 0; m <= ell; ++m) {
            CAPTURE(ell);
            CAPTURE(m);
            const BlockPrediction p = predict_blocks(ell, m);
            const int top = m * (ell - m);
            REQUIRE(p.increments.size() == static_cast<std::size_t>(top + 1));
            CHECK(std::is_sorted(p.increments.rbegin(), p.increments.rend()));

            std::size_t weighted = 0;
            for (const auto& [size, count] : p.multiplicities) {
                weighted += size * count;
                if (0 < m && m < ell) CHECK((top - static_cast<int>(size)) % 2 != 0);
            }
            CHECK(BigInt(static_cast<unsigned long>(weighted)) == binomial(ell, m));

            for (std::size_t d = 1; d <= p.increments.size(); ++d) {
                std::size_t tail = 0;
                for (const auto& [size, count] : p.multiplicities) {
                    if (size >= d) tail += count;
                }
                CHECK(p.increments[d - 1] == tail);
            }
        }
    }
}
