#pragma once

#include "fockjordan/fock.hpp"
#include "fockjordan/matrix.hpp"
#include "fockjordan/operators.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace fockjordan {

using BlockCounts = std::map<std::size_t, std::size_t>;

struct KernelProfile {
    /// dims[d] = dim ker M^d for d = 0..dmax (dims[0] = 0).
    std::vector<std::size_t> dims;
    /// increments[d-1] = dims[d] - dims[d-1] for d = 1..dmax.
    std::vector<std::size_t> increments;
};

/// Kernel dimensions of the powers of a nilpotent matrix. The default dmax is
/// m(ell-m)+1 read from the matrix's sector tag (or its size when untagged).
/// Throws IntegrityError when M^dmax is not zero.
KernelProfile kernel_profile(const ExactMatrix& shift, std::optional<std::size_t> dmax = std::nullopt);

/// count[d] = increments[d] - increments[d+1]; zero counts are omitted.
BlockCounts blocks_from_profile(const KernelProfile& profile);

struct GradedMapReport {
    int weight = 0; ///< the map goes V^weight -> V^{weight+1}
    std::size_t domain_dim = 0;
    std::size_t codomain_dim = 0;
    std::size_t rank = 0;
    bool injective = false;
    bool surjective = false;
};

/// One row per weight r = 0..m(ell-m)-1.
std::vector<GradedMapReport> injectivity_surjectivity_table(int ell, int m, const Couplings& c);

/// True when every map below the injectivity threshold floor((D-1)/2) is
/// injective and every map from floor(D/2) on is surjective, D = m(ell-m).
bool matches_injectivity_thresholds(const std::vector<GradedMapReport>& table, int ell, int m);

/// v_1, ..., v_length with M v_i = v_{i+1} and M v_length = 0. v_1 is a
/// lowest-weight vector (annihilated by M').
struct JordanChain {
    std::size_t length = 0;
    int head_weight = 0;
    std::vector<DenseVector> vectors;
};

struct JordanReport {
    int ell = 0;
    int m = 0;
    std::vector<std::size_t> sector_dims;
    KernelProfile profile;
    BlockCounts computed_blocks;
    BlockCounts predicted_blocks;
    std::vector<std::size_t> predicted_increments;
    std::optional<std::vector<JordanChain>> chains;
    bool verified = false;
};

/// Kernel profile and block counts of M on the sector, compared with the
/// q-binomial prediction. No chains.
JordanReport analyze_sector(int ell, int m, const Couplings& c,
                            std::optional<std::size_t> dmax = std::nullopt);

/// Change of basis P whose columns are the chains, each listed from its
/// kernel vector back to its head, and the matching nilpotent J with ones on
/// the superdiagonal, so that M P = P J.
struct ChainBasis {
    ExactMatrix p;
    ExactMatrix j;
};

ChainBasis assemble_chain_basis(const std::vector<JordanChain>& chains, std::size_t dim);

/// Explicit Jordan basis from lowest-weight vectors: for each weight r, the
/// reduced echelon basis of ker M' on V^r heads a chain of length
/// m(ell-m) - 2r + 1 generated by M. Throws IntegrityError if M P = P J,
/// full rank of P, or the block counts fail to check out.
JordanReport build_chains(int ell, int m, const Couplings& c);

struct ConjectureCheck {
    std::size_t proper_eigenstate_count = 0;
    std::size_t middle_sector_dim = 0;
    bool equal = false;
};

/// dim ker M against dim V^{floor(m(ell-m)/2)}.
ConjectureCheck prosen_conjecture_check(int ell, int m, const Couplings& c);

} // namespace fockjordan
