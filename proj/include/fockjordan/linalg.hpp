#pragma once

#include "fockjordan/matrix.hpp"

#include <cstddef>
#include <vector>

namespace fockjordan {

/// Rank over Q. The matrix is split into the connected components of its
/// row/column incidence graph (graded operators fall apart into their weight
/// blocks this way); each component is cleared of denominators row by row and
/// reduced with fraction-free Bareiss elimination.
std::size_t exact_rank(const ExactMatrix& a);

/// Rank of a dense integer matrix by Bareiss elimination, largest-magnitude
/// pivot per column. The matrix is consumed.
std::size_t bareiss_rank(std::vector<std::vector<BigInt>> rows);

struct RowEchelon {
    std::vector<DenseVector> rows; ///< nonzero rows of the reduced row echelon form
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form over Q of the dense row list.
RowEchelon reduced_row_echelon(std::vector<DenseVector> rows, std::size_t ncols);

/// Basis of {x : A x = 0}, returned in reduced row echelon form (unique for
/// the subspace), so the result does not depend on how it was computed.
std::vector<DenseVector> null_space(const ExactMatrix& a);

} // namespace fockjordan
