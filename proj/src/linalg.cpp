#include "fockjordan/linalg.hpp"

#include <numeric>
#include <utility>

namespace fockjordan {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

} // namespace

std::size_t bareiss_rank(std::vector<std::vector<BigInt>> rows) {
    if (rows.empty()) return 0;
    const std::size_t nrows = rows.size();
    const std::size_t ncols = rows.front().size();
    BigInt previous = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t pivot_row = nrows;
        for (std::size_t i = rank; i < nrows; ++i) {
            if (rows[i][col] == 0) continue;
            if (pivot_row == nrows || mpz_cmpabs(rows[i][col].get_mpz_t(), rows[pivot_row][col].get_mpz_t()) > 0) pivot_row = i;
        }
        if (pivot_row == nrows) continue;
        std::swap(rows[rank], rows[pivot_row]);
        const BigInt& pivot = rows[rank][col];
        for (std::size_t i = rank + 1; i < nrows; ++i) {
            const BigInt factor = rows[i][col];
            for (std::size_t j = col + 1; j < ncols; ++j) {
                BigInt v = rows[i][j] * pivot - factor * rows[rank][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
                rows[i][j] = std::move(v);
            }
            rows[i][col] = 0;
        }
        previous = pivot;
        ++rank;
    }
    return rank;
}

std::size_t exact_rank(const ExactMatrix& a) {
    const std::size_t nr = a.rows();
    const std::size_t nc = a.cols();
    DisjointSets sets(nr + nc);
    for (std::size_t i = 0; i < nr; ++i) {
        for (const auto& e : a.row(i)) sets.unite(i, nr + e.col);
    }

    std::vector<std::vector<std::size_t>> comp_rows(nr + nc);
    std::vector<std::vector<std::size_t>> comp_cols(nr + nc);
    for (std::size_t i = 0; i < nr; ++i) {
        if (!a.row(i).empty()) comp_rows[sets.find(i)].push_back(i);
    }
    for (std::size_t j = 0; j < nc; ++j) comp_cols[sets.find(nr + j)].push_back(j);

    std::size_t rank = 0;
    std::vector<std::size_t> local_col(nc, 0);
    for (std::size_t root = 0; root < nr + nc; ++root) {
        const auto& rows = comp_rows[root];
        if (rows.empty()) continue;
        const auto& cols = comp_cols[root];
        for (std::size_t p = 0; p < cols.size(); ++p) local_col[cols[p]] = p;

        std::vector<std::vector<BigInt>> dense;
        dense.reserve(rows.size());
        for (std::size_t i : rows) {
            BigInt scale = 1;
            for (const auto& e : a.row(i)) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), e.value.get_den_mpz_t());
            std::vector<BigInt> r(cols.size(), BigInt(0));
            for (const auto& e : a.row(i)) {
                r[local_col[e.col]] = e.value.get_num() * (scale / e.value.get_den());
            }
            dense.push_back(std::move(r));
        }
        rank += bareiss_rank(std::move(dense));
    }
    return rank;
}

RowEchelon reduced_row_echelon(std::vector<DenseVector> rows, std::size_t ncols) {
    RowEchelon out;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t pivot_row = rows.size();
        for (std::size_t i = rank; i < rows.size(); ++i) {
            if (rows[i][col] != 0) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row == rows.size()) continue;
        std::swap(rows[rank], rows[pivot_row]);
        const Rational inv = 1 / rows[rank][col];
        for (std::size_t j = col; j < ncols; ++j) rows[rank][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            const Rational factor = rows[i][col];
            for (std::size_t j = col; j < ncols; ++j) {
                if (rows[rank][j] != 0) rows[i][j] -= factor * rows[rank][j];
            }
        }
        out.pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    out.rows = std::move(rows);
    return out;
}

std::vector<DenseVector> null_space(const ExactMatrix& a) {
    const std::size_t n = a.cols();
    std::vector<DenseVector> dense;
    dense.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (a.row(i).empty()) continue;
        DenseVector r(n, Rational(0));
        for (const auto& e : a.row(i)) r[e.col] = e.value;
        dense.push_back(std::move(r));
    }
    const RowEchelon ech = reduced_row_echelon(std::move(dense), n);

    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : ech.pivots) is_pivot[p] = true;

    std::vector<DenseVector> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        DenseVector v(n, Rational(0));
        v[free] = 1;
        for (std::size_t k = 0; k < ech.pivots.size(); ++k) v[ech.pivots[k]] = -ech.rows[k][free];
        basis.push_back(std::move(v));
    }
    return reduced_row_echelon(std::move(basis), n).rows;
}

} // namespace fockjordan
