#include "fockjordan/matrix.hpp"

#include "fockjordan/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace fockjordan {

namespace {

std::string shape(std::size_t r, std::size_t c) {
    return std::to_string(r) + "x" + std::to_string(c);
}

// Merges a*x + b*y for two canonical sparse rows.
std::vector<MatrixEntry> merge_rows(std::span<const MatrixEntry> x, std::span<const MatrixEntry> y,
                                    int sign_y) {
    std::vector<MatrixEntry> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].col < y[j].col)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].col < x[i].col) {
            out.push_back({y[j].col, sign_y > 0 ? y[j].value : Rational(-y[j].value)});
            ++j;
        } else {
            Rational v = sign_y > 0 ? Rational(x[i].value + y[j].value) : Rational(x[i].value - y[j].value);
            if (v != 0) out.push_back({x[i].col, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, SectorTag domain, SectorTag codomain)
    : rows_(rows), cols_(cols), domain_(std::move(domain)), codomain_(std::move(codomain)), data_(rows) {}

ExactMatrix ExactMatrix::identity(std::size_t n, SectorTag sector) {
    ExactMatrix out(n, n, sector, sector);
    for (std::size_t i = 0; i < n; ++i) out.data_[i].push_back({i, Rational(1)});
    return out;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<Rational>& diag, SectorTag sector) {
    ExactMatrix out(diag.size(), diag.size(), sector, sector);
    for (std::size_t i = 0; i < diag.size(); ++i) {
        if (diag[i] != 0) out.data_[i].push_back({i, diag[i]});
    }
    return out;
}

ExactMatrix ExactMatrix::from_columns(std::size_t rows, const std::vector<DenseVector>& columns,
                                      SectorTag domain, SectorTag codomain) {
    ExactMatrix out(rows, columns.size(), std::move(domain), std::move(codomain));
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) {
            throw DomainError("column " + std::to_string(j) + " has length " +
                              std::to_string(columns[j].size()) + ", expected " + std::to_string(rows));
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (columns[j][i] != 0) out.data_[i].push_back({j, columns[j][i]});
        }
    }
    return out;
}

std::size_t ExactMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
}

Rational ExactMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) {
        throw DomainError("index (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") outside " + shape(rows_, cols_) + " matrix");
    }
    const auto& r = data_[i];
    const auto it = std::lower_bound(r.begin(), r.end(), j,
                                     [](const MatrixEntry& e, std::size_t c) { return e.col < c; });
    if (it != r.end() && it->col == j) return it->value;
    return 0;
}

void ExactMatrix::check_same_shape(const ExactMatrix& rhs, const char* op) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw DomainError(std::string("shape mismatch in ") + op + ": " + shape(rows_, cols_) +
                          " vs " + shape(rhs.rows_, rhs.cols_));
    }
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
    if (cols_ != rhs.rows_) {
        throw DomainError("shape mismatch in product: " + shape(rows_, cols_) + " * " +
                          shape(rhs.rows_, rhs.cols_));
    }
    ExactMatrix out(rows_, rhs.cols_, rhs.domain_, codomain_);
    std::map<std::size_t, Rational> acc;
    for (std::size_t i = 0; i < rows_; ++i) {
        acc.clear();
        for (const auto& [k, a] : data_[i]) {
            for (const auto& [j, b] : rhs.data_[k]) acc[j] += a * b;
        }
        auto& dst = out.data_[i];
        for (auto& [j, v] : acc) {
            if (v != 0) dst.push_back({j, std::move(v)});
        }
    }
    return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& rhs) const {
    check_same_shape(rhs, "sum");
    ExactMatrix out(rows_, cols_, domain_, codomain_);
    for (std::size_t i = 0; i < rows_; ++i) out.data_[i] = merge_rows(data_[i], rhs.data_[i], +1);
    return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& rhs) const {
    check_same_shape(rhs, "difference");
    ExactMatrix out(rows_, cols_, domain_, codomain_);
    for (std::size_t i = 0; i < rows_; ++i) out.data_[i] = merge_rows(data_[i], rhs.data_[i], -1);
    return out;
}

ExactMatrix ExactMatrix::scaled(const Rational& factor) const {
    ExactMatrix out(rows_, cols_, domain_, codomain_);
    if (factor == 0) return out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out.data_[i].reserve(data_[i].size());
        for (const auto& [j, v] : data_[i]) out.data_[i].push_back({j, v * factor});
    }
    return out;
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix out(cols_, rows_, codomain_, domain_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (const auto& [j, v] : data_[i]) out.data_[j].push_back({i, v});
    }
    return out;
}

DenseVector ExactMatrix::apply(const DenseVector& v) const {
    if (v.size() != cols_) {
        throw DomainError("vector of length " + std::to_string(v.size()) + " applied to " +
                          shape(rows_, cols_) + " matrix");
    }
    DenseVector out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (const auto& [j, a] : data_[i]) {
            if (v[j] != 0) out[i] += a * v[j];
        }
    }
    return out;
}

ExactMatrix ExactMatrix::submatrix(std::span<const std::size_t> row_indices,
                                   std::span<const std::size_t> col_indices) const {
    std::map<std::size_t, std::size_t> col_pos;
    for (std::size_t p = 0; p < col_indices.size(); ++p) {
        if (col_indices[p] >= cols_) throw DomainError("submatrix column out of range");
        col_pos.emplace(col_indices[p], p);
    }
    MatrixBuilder builder(row_indices.size(), col_indices.size());
    for (std::size_t p = 0; p < row_indices.size(); ++p) {
        if (row_indices[p] >= rows_) throw DomainError("submatrix row out of range");
        for (const auto& [j, v] : data_[row_indices[p]]) {
            if (auto it = col_pos.find(j); it != col_pos.end()) builder.add(p, it->second, v);
        }
    }
    return std::move(builder).build();
}

std::optional<Rational> ExactMatrix::max_abs_entry() const {
    std::optional<Rational> best;
    for (const auto& r : data_) {
        for (const auto& e : r) {
            Rational a = abs(e.value);
            if (!best || a > *best) best = std::move(a);
        }
    }
    return best;
}

bool ExactMatrix::equal_entries(const ExactMatrix& other) const {
    for (std::size_t i = 0; i < rows_; ++i) {
        const auto& a = data_[i];
        const auto& b = other.data_[i];
        if (a.size() != b.size()) return false;
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (a[k].col != b[k].col || a[k].value != b[k].value) return false;
        }
    }
    return true;
}

MatrixBuilder::MatrixBuilder(std::size_t rows, std::size_t cols, SectorTag domain, SectorTag codomain)
    : rows_(rows), cols_(cols), domain_(std::move(domain)), codomain_(std::move(codomain)), rows_data_(rows) {}

void MatrixBuilder::add(std::size_t i, std::size_t j, const Rational& value) {
    if (i >= rows_ || j >= cols_) {
        throw DomainError("entry (" + std::to_string(i) + ", " + std::to_string(j) + ") outside " +
                          shape(rows_, cols_) + " matrix");
    }
    if (value == 0) return;
    rows_data_[i][j] += value;
}

ExactMatrix MatrixBuilder::build() && {
    ExactMatrix out(rows_, cols_, std::move(domain_), std::move(codomain_));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (auto& [j, v] : rows_data_[i]) {
            if (v != 0) out.data_[i].push_back({j, std::move(v)});
        }
    }
    return out;
}

} // namespace fockjordan
