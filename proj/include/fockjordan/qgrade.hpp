#pragma once

#include "fockjordan/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace fockjordan {

/// Polynomial in q with non-negative big-integer coefficients, stored densely
/// with index = power of q. Trailing zeros are trimmed; the zero polynomial
/// has no coefficients.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<BigInt> coeffs);

    static QPolynomial one() { return QPolynomial({BigInt(1)}); }
    /// q^power.
    static QPolynomial monomial(std::size_t power);

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    /// Coefficient of q^power; zero outside the stored range (including power < 0).
    BigInt coefficient(long power) const;

    BigInt evaluate_at_one() const;
    bool is_palindromic() const;

    /// "1 + q + 2q^2", "0" for the zero polynomial.
    std::string to_string() const;

    QPolynomial operator+(const QPolynomial& rhs) const;
    QPolynomial operator*(const QPolynomial& rhs) const;
    /// Multiplication by q^power.
    QPolynomial shifted(std::size_t power) const;

    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

/// [n]_q = 1 + q + ... + q^{n-1}. Throws DomainError for n < 1.
QPolynomial q_bracket(int n);

/// [n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1.
QPolynomial q_factorial(int n);

/// Gaussian binomial via [l m] = q^m [l-1 m] + [l-1 m-1]. Results are
/// memoized per process; safe to call from several threads.
QPolynomial q_binomial(int ell, int m);

/// Entry d-1 holds the predicted dim ker M^d - dim ker M^{d-1}, d = 1..m(l-m)+1.
std::vector<std::size_t> predict_increments(int ell, int m);

struct BlockPrediction {
    std::vector<std::size_t> increments;
    /// block size -> number of blocks; sizes with zero count are omitted.
    std::map<std::size_t, std::size_t> multiplicities;
};

BlockPrediction predict_blocks(int ell, int m);

} // namespace fockjordan
