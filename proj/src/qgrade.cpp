#include "fockjordan/qgrade.hpp"

#include "fockjordan/errors.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <utility>

namespace fockjordan {

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPolynomial QPolynomial::monomial(std::size_t power) {
    std::vector<BigInt> c(power + 1, BigInt(0));
    c[power] = 1;
    return QPolynomial(std::move(c));
}

void QPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPolynomial::coefficient(long power) const {
    if (power < 0 || power >= static_cast<long>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(power)];
}

BigInt QPolynomial::evaluate_at_one() const {
    BigInt sum = 0;
    for (const auto& c : coeffs_) sum += c;
    return sum;
}

bool QPolynomial::is_palindromic() const {
    return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

std::string QPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t p = 0; p < coeffs_.size(); ++p) {
        const BigInt& c = coeffs_[p];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (p == 0) {
            out += c.get_str();
            continue;
        }
        if (c != 1) out += c.get_str();
        out += "q";
        if (p > 1) out += "^" + std::to_string(p);
    }
    return out;
}

QPolynomial QPolynomial::operator+(const QPolynomial& rhs) const {
    std::vector<BigInt> c(std::max(coeffs_.size(), rhs.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) c[i] += rhs.coeffs_[i];
    return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::operator*(const QPolynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    std::vector<BigInt> c(coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::shifted(std::size_t power) const {
    if (is_zero()) return {};
    std::vector<BigInt> c(power, BigInt(0));
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return QPolynomial(std::move(c));
}

QPolynomial q_bracket(int n) {
    if (n < 1) throw DomainError("q_bracket needs n >= 1, got n=" + std::to_string(n));
    return QPolynomial(std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(1)));
}

QPolynomial q_factorial(int n) {
    if (n < 0) throw DomainError("q_factorial needs n >= 0, got n=" + std::to_string(n));
    QPolynomial result = QPolynomial::one();
    for (int k = 1; k <= n; ++k) result = result * q_bracket(k);
    return result;
}

namespace {

class BinomialMemo {
public:
    QPolynomial get(int ell, int m) {
        if (m == 0 || m == ell) return QPolynomial::one();
        const auto key = std::make_pair(ell, m);
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(key); it != table_.end()) return it->second;
        }
        // Row-by-row fill of the entries (l, k) the recurrence reaches from
        // (ell, m): k <= m and l - k <= ell - m.
        for (int l = 2; l <= ell; ++l) {
            for (int k = std::max(1, l - (ell - m)); k <= std::min(l - 1, m); ++k) {
                const auto entry = std::make_pair(l, k);
                {
                    std::shared_lock lock(mutex_);
                    if (table_.contains(entry)) continue;
                }
                QPolynomial value = lookup(l - 1, k).shifted(static_cast<std::size_t>(k)) +
                                    lookup(l - 1, k - 1);
                std::unique_lock lock(mutex_);
                table_.try_emplace(entry, std::move(value));
            }
        }
        std::shared_lock lock(mutex_);
        return table_.at(key);
    }

private:
    QPolynomial lookup(int ell, int m) {
        if (m == 0 || m == ell) return QPolynomial::one();
        std::shared_lock lock(mutex_);
        return table_.at({ell, m});
    }

    std::shared_mutex mutex_;
    std::map<std::pair<int, int>, QPolynomial> table_;
};

BinomialMemo& memo() {
    static BinomialMemo instance;
    return instance;
}

void check_sector_args(int ell, int m) {
    if (ell < 0) throw DomainError("ell must be non-negative, got ell=" + std::to_string(ell));
    if (m < 0 || m > ell) {
        throw DomainError("m must lie in [0, ell], got m=" + std::to_string(m) +
                          " with ell=" + std::to_string(ell));
    }
}

std::size_t to_count(const BigInt& value) {
    if (!value.fits_ulong_p()) throw DomainError("coefficient exceeds machine range: " + value.get_str());
    return value.get_ui();
}

} // namespace

QPolynomial q_binomial(int ell, int m) {
    check_sector_args(ell, m);
    return memo().get(ell, m);
}

std::vector<std::size_t> predict_increments(int ell, int m) {
    const QPolynomial poly = q_binomial(ell, m);
    const long top = static_cast<long>(m) * (ell - m);
    std::vector<std::size_t> inc;
    inc.reserve(static_cast<std::size_t>(top + 1));
    for (long d = 1; d <= top + 1; ++d) {
        // top - (d-1) >= 0 here, so integer division is the floor.
        inc.push_back(to_count(poly.coefficient((top - (d - 1)) / 2)));
    }
    return inc;
}

BlockPrediction predict_blocks(int ell, int m) {
    BlockPrediction out;
    out.increments = predict_increments(ell, m);
    const QPolynomial poly = q_binomial(ell, m);
    const long top = static_cast<long>(m) * (ell - m);
    for (long d = 1; d <= top + 1; ++d) {
        if ((top - d) % 2 == 0) continue;
        const BigInt count = poly.coefficient((top - d + 1) / 2) - poly.coefficient((top - d - 1) / 2);
        if (count != 0) out.multiplicities[static_cast<std::size_t>(d)] = to_count(count);
    }
    return out;
}

} // namespace fockjordan
