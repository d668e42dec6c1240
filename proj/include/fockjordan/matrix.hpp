#pragma once

#include "fockjordan/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fockjordan {

/// Which (graded) sector a matrix acts on or into. Weight is set only for
/// blocks restricted to a single weight space.
struct SectorTag {
    int ell = 0;
    int m = 0;
    std::optional<int> weight;

    friend bool operator==(const SectorTag&, const SectorTag&) = default;
};

struct MatrixEntry {
    std::size_t col;
    Rational value;
};

using DenseVector = std::vector<Rational>;

/// Sparse matrix over the rationals. Rows are stored with strictly increasing
/// column indices and no explicit zeros, so iteration order is canonical.
/// Values are immutable once built; use MatrixBuilder to assemble one.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols, SectorTag domain = {}, SectorTag codomain = {});

    static ExactMatrix identity(std::size_t n, SectorTag sector = {});
    /// Diagonal matrix; zero entries are dropped.
    static ExactMatrix diagonal(const std::vector<Rational>& diag, SectorTag sector = {});
    /// Columns are the given vectors, each of length `rows`.
    static ExactMatrix from_columns(std::size_t rows, const std::vector<DenseVector>& columns,
                                    SectorTag domain = {}, SectorTag codomain = {});

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nonzeros() const;
    bool is_zero() const { return nonzeros() == 0; }
    bool is_square() const { return rows_ == cols_; }

    const SectorTag& domain() const { return domain_; }
    const SectorTag& codomain() const { return codomain_; }

    std::span<const MatrixEntry> row(std::size_t i) const { return data_[i]; }
    /// Zero when no entry is stored.
    Rational at(std::size_t i, std::size_t j) const;

    /// Throws DomainError on shape mismatch.
    ExactMatrix operator*(const ExactMatrix& rhs) const;
    ExactMatrix operator+(const ExactMatrix& rhs) const;
    ExactMatrix operator-(const ExactMatrix& rhs) const;
    ExactMatrix scaled(const Rational& factor) const;
    ExactMatrix transposed() const;
    DenseVector apply(const DenseVector& v) const;

    /// Rows `row_indices`, columns `col_indices`, in the given order.
    ExactMatrix submatrix(std::span<const std::size_t> row_indices,
                          std::span<const std::size_t> col_indices) const;

    /// Largest |entry|, or nullopt for the zero matrix.
    std::optional<Rational> max_abs_entry() const;

    /// Same shape and stored entries; sector tags are not compared.
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.equal_entries(b);
    }

private:
    friend class MatrixBuilder;

    bool equal_entries(const ExactMatrix& other) const;
    void check_same_shape(const ExactMatrix& rhs, const char* op) const;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    SectorTag domain_;
    SectorTag codomain_;
    std::vector<std::vector<MatrixEntry>> data_;
};

/// Accumulates entries (repeated coordinates are summed) and produces a
/// canonical ExactMatrix.
class MatrixBuilder {
public:
    MatrixBuilder(std::size_t rows, std::size_t cols, SectorTag domain = {}, SectorTag codomain = {});

    /// Throws DomainError for out-of-range coordinates.
    void add(std::size_t i, std::size_t j, const Rational& value);

    ExactMatrix build() &&;

private:
    std::size_t rows_;
    std::size_t cols_;
    SectorTag domain_;
    SectorTag codomain_;
    std::vector<std::map<std::size_t, Rational>> rows_data_;
};

} // namespace fockjordan
