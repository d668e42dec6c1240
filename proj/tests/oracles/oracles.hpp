#pragma once

// Test-only reference computations. Each routine reaches its answer by a
// route that shares no code with the library path it is compared against.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

using Dense = std::vector<std::vector<mpq_class>>;

/// Occupation tuples of all m-particle states, sorted as tuples (site 1 first).
inline std::vector<std::vector<int>> sorted_states(int ell, int m) {
    std::vector<std::vector<int>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ell); ++mask) {
        std::vector<int> nu(static_cast<std::size_t>(ell));
        int count = 0;
        for (int k = 0; k < ell; ++k) {
            nu[static_cast<std::size_t>(k)] = static_cast<int>((mask >> k) & 1U);
            count += nu[static_cast<std::size_t>(k)];
        }
        if (count == m) out.push_back(std::move(nu));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline int tuple_weight(const std::vector<int>& nu) {
    int m = 0;
    int sum = 0;
    for (std::size_t k = 0; k < nu.size(); ++k) {
        m += nu[k];
        sum += static_cast<int>(k + 1) * nu[k];
    }
    return sum - m * (m + 1) / 2;
}

/// dim V^r by brute force over all 2^ell masks.
inline std::vector<std::size_t> weight_counts(int ell, int m) {
    std::vector<std::size_t> counts(static_cast<std::size_t>(m * (ell - m) + 1), 0);
    for (const auto& nu : sorted_states(ell, m)) ++counts[static_cast<std::size_t>(tuple_weight(nu))];
    return counts;
}

/// Term of a fermionic word: coefficient times b'_{s_1} ... b'_{s_k} |right>
/// with creation sites in the order written (not sorted).
struct Term {
    int coefficient;
    std::vector<int> creations;
};

/// Applies b_j to b'_{a_1} b'_{a_2} ... |right> by anticommuting it to the
/// right: b_j b'_a = delta_{ja} - b'_a b_j, and b_j |right> = 0.
inline std::vector<Term> annihilate(int site, const Term& t) {
    std::vector<Term> out;
    int sign = 1;
    for (std::size_t p = 0; p < t.creations.size(); ++p) {
        if (t.creations[p] == site) {
            Term r{t.coefficient * sign, {}};
            for (std::size_t q = 0; q < t.creations.size(); ++q) {
                if (q != p) r.creations.push_back(t.creations[q]);
            }
            out.push_back(std::move(r));
        }
        sign = -sign;
    }
    return out;
}

/// Sorts the creation word into increasing site order by adjacent swaps,
/// tracking the sign; a repeated site makes the word vanish.
inline std::pair<int, std::vector<int>> normal_order(std::vector<int> word) {
    int sign = 1;
    for (std::size_t i = 0; i < word.size(); ++i) {
        for (std::size_t j = 0; j + 1 < word.size() - i; ++j) {
            if (word[j] == word[j + 1]) return {0, {}};
            if (word[j] > word[j + 1]) {
                std::swap(word[j], word[j + 1]);
                sign = -sign;
            }
        }
    }
    for (std::size_t j = 0; j + 1 < word.size(); ++j) {
        if (word[j] == word[j + 1]) return {0, {}};
    }
    return {sign, word};
}

/// <nu'| b'_i b_j |nu> as a map from occupation tuples to coefficients.
inline std::map<std::vector<int>, int> bilinear_action(int create_site, int annihilate_site,
                                                       const std::vector<int>& nu) {
    Term start{1, {}};
    for (std::size_t k = 0; k < nu.size(); ++k) {
        if (nu[k]) start.creations.push_back(static_cast<int>(k + 1));
    }
    std::map<std::vector<int>, int> out;
    for (Term t : annihilate(annihilate_site, start)) {
        t.creations.insert(t.creations.begin(), create_site);
        auto [sign, sorted] = normal_order(t.creations);
        if (sign == 0) continue;
        std::vector<int> occ(nu.size(), 0);
        for (int s : sorted) occ[static_cast<std::size_t>(s - 1)] = 1;
        out[occ] += sign * t.coefficient;
    }
    for (auto it = out.begin(); it != out.end();) {
        it = it->second == 0 ? out.erase(it) : std::next(it);
    }
    return out;
}

/// Dense matrix of M = sum_k c_k b'_{k+1} b_k built from the hop rule
/// directly: a particle at k moves to an empty k+1.
inline Dense dense_shift(int ell, int m, const std::vector<mpq_class>& c) {
    const auto states = sorted_states(ell, m);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < states.size(); ++i) index[states[i]] = i;
    Dense a(states.size(), std::vector<mpq_class>(states.size(), 0));
    for (std::size_t j = 0; j < states.size(); ++j) {
        for (int k = 0; k + 1 < ell; ++k) {
            auto s = states[j];
            if (s[static_cast<std::size_t>(k)] == 1 && s[static_cast<std::size_t>(k + 1)] == 0) {
                std::swap(s[static_cast<std::size_t>(k)], s[static_cast<std::size_t>(k + 1)]);
                a[index[s]][j] += c[static_cast<std::size_t>(k)];
            }
        }
    }
    return a;
}

inline Dense multiply(const Dense& a, const Dense& b) {
    const std::size_t n = a.size();
    const std::size_t p = b.empty() ? 0 : b.front().size();
    Dense out(n, std::vector<mpq_class>(p, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < p; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    }
    return out;
}

/// Rank by textbook Gauss-Jordan elimination over Q (division-based, first
/// nonzero pivot).
inline std::size_t rank(Dense a) {
    std::size_t r = 0;
    const std::size_t cols = a.empty() ? 0 : a.front().size();
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            if (a[i][c] == 0) continue;
            const mpq_class f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

/// Kernel increments of M^d, d = 1..m(ell-m)+1, by dense powers and ranks.
inline std::vector<std::size_t> kernel_increments(int ell, int m, const std::vector<mpq_class>& c) {
    const Dense shift = dense_shift(ell, m, c);
    const std::size_t n = shift.size();
    Dense power(n, std::vector<mpq_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
    std::vector<std::size_t> inc;
    std::size_t previous = 0;
    for (int d = 1; d <= m * (ell - m) + 1; ++d) {
        power = multiply(power, shift);
        const std::size_t dim = n - rank(power);
        inc.push_back(dim - previous);
        previous = dim;
    }
    return inc;
}

/// Integer polynomial long division; requires an exact quotient.
inline std::vector<mpz_class> divide_exact(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    std::vector<mpz_class> q(num.size() - den.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
        q[i] = num[i + den.size() - 1] / den.back();
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= q[i] * den[j];
    }
    return q;
}

/// [ell m]_q as the quotient [ell]_q! / ([m]_q! [ell-m]_q!).
inline std::vector<mpz_class> q_binomial_by_quotient(int ell, int m) {
    auto factorial = [](int n) {
        std::vector<mpz_class> f{1};
        for (int k = 1; k <= n; ++k) {
            std::vector<mpz_class> next(f.size() + static_cast<std::size_t>(k) - 1, 0);
            for (std::size_t i = 0; i < f.size(); ++i) {
                for (int j = 0; j < k; ++j) next[i + static_cast<std::size_t>(j)] += f[i];
            }
            f = std::move(next);
        }
        return f;
    };
    auto mul = [](const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
        std::vector<mpz_class> out(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
        }
        return out;
    };
    return divide_exact(factorial(ell), mul(factorial(m), factorial(ell - m)));
}

/// Number of standard Young tableaux of a rows x cols rectangle (hook lengths).
inline mpz_class rectangle_tableaux(int rows, int cols) {
    mpz_class num = 1;
    for (int k = 2; k <= rows * cols; ++k) num *= k;
    mpz_class hooks = 1;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) hooks *= (rows - i) + (cols - j) - 1;
    }
    return num / hooks;
}

} // namespace oracle
