#include "fockjordan/jordan.hpp"

#include "fockjordan/errors.hpp"
#include "fockjordan/linalg.hpp"
#include "fockjordan/qgrade.hpp"

#include <string>
#include <utility>

namespace fockjordan {

KernelProfile kernel_profile(const ExactMatrix& shift, std::optional<std::size_t> dmax) {
    if (!shift.is_square()) throw DomainError("kernel_profile needs a square matrix");
    const std::size_t n = shift.rows();
    const SectorTag& tag = shift.domain();
    const std::size_t bound =
        dmax.value_or(tag.ell > 0 ? static_cast<std::size_t>(tag.m * (tag.ell - tag.m) + 1) : std::max<std::size_t>(n, 1));

    KernelProfile profile;
    profile.dims.push_back(0);
    ExactMatrix power = ExactMatrix::identity(n, tag);
    for (std::size_t d = 1; d <= bound; ++d) {
        if (!power.is_zero()) power = power * shift;
        profile.dims.push_back(n - exact_rank(power));
        profile.increments.push_back(profile.dims[d] - profile.dims[d - 1]);
    }
    if (!power.is_zero()) {
        throw IntegrityError("matrix is not nilpotent within " + std::to_string(bound) +
                             " steps: M^" + std::to_string(bound) + " has rank " +
                             std::to_string(n - profile.dims.back()));
    }
    return profile;
}

BlockCounts blocks_from_profile(const KernelProfile& profile) {
    BlockCounts out;
    const auto& inc = profile.increments;
    for (std::size_t d = 1; d <= inc.size(); ++d) {
        const std::size_t here = inc[d - 1];
        const std::size_t next = d < inc.size() ? inc[d] : 0;
        if (here < next) {
            throw IntegrityError("kernel increments increase at d=" + std::to_string(d));
        }
        if (here > next) out[d] = here - next;
    }
    return out;
}

namespace {

ExactMatrix graded_block(const ExactMatrix& op, const SectorBasis& basis, int from, int to) {
    const auto& cols = basis.indices_with_weight(from);
    const auto& rows = basis.indices_with_weight(to);
    return op.submatrix(rows, cols);
}

} // namespace

std::vector<GradedMapReport> injectivity_surjectivity_table(int ell, int m, const Couplings& c) {
    const SectorBasis basis = enumerate_sector(ell, m);
    const ExactMatrix shift = build_shift(basis, c);
    std::vector<GradedMapReport> table;
    for (int r = 0; r < basis.top_weight(); ++r) {
        GradedMapReport row;
        row.weight = r;
        row.domain_dim = basis.indices_with_weight(r).size();
        row.codomain_dim = basis.indices_with_weight(r + 1).size();
        row.rank = exact_rank(graded_block(shift, basis, r, r + 1));
        row.injective = row.rank == row.domain_dim;
        row.surjective = row.rank == row.codomain_dim;
        table.push_back(row);
    }
    return table;
}

bool matches_injectivity_thresholds(const std::vector<GradedMapReport>& table, int ell, int m) {
    const int top = m * (ell - m);
    if (table.size() != static_cast<std::size_t>(top)) return false;
    // Both thresholds are non-negative whenever a row exists (top >= 1).
    const int injective_up_to = (top - 1) / 2;
    const int surjective_from = top / 2;
    for (const auto& row : table) {
        if (row.weight <= injective_up_to && !row.injective) return false;
        if (row.weight >= surjective_from && !row.surjective) return false;
    }
    return true;
}

JordanReport analyze_sector(int ell, int m, const Couplings& c, std::optional<std::size_t> dmax) {
    const SectorBasis basis = enumerate_sector(ell, m);
    const ExactMatrix shift = build_shift(basis, c);
    const BlockPrediction prediction = predict_blocks(ell, m);

    JordanReport report;
    report.ell = ell;
    report.m = m;
    report.sector_dims = sector_weight_dimensions(basis);
    report.profile = kernel_profile(shift, dmax);
    report.computed_blocks = blocks_from_profile(report.profile);
    report.predicted_blocks = prediction.multiplicities;
    report.predicted_increments = prediction.increments;
    report.verified = report.computed_blocks == report.predicted_blocks;
    return report;
}

ChainBasis assemble_chain_basis(const std::vector<JordanChain>& chains, std::size_t dim) {
    std::vector<DenseVector> columns;
    columns.reserve(dim);
    MatrixBuilder jordan(dim, dim);
    for (const auto& chain : chains) {
        const std::size_t start = columns.size();
        for (auto it = chain.vectors.rbegin(); it != chain.vectors.rend(); ++it) columns.push_back(*it);
        for (std::size_t k = start + 1; k < columns.size(); ++k) jordan.add(k - 1, k, Rational(1));
    }
    if (columns.size() != dim) {
        throw IntegrityError("chains hold " + std::to_string(columns.size()) + " vectors for a " +
                             std::to_string(dim) + "-dimensional sector");
    }
    return {ExactMatrix::from_columns(dim, columns), std::move(jordan).build()};
}

JordanReport build_chains(int ell, int m, const Couplings& c) {
    JordanReport report = analyze_sector(ell, m, c);
    const SectorBasis basis = enumerate_sector(ell, m);
    const ExactMatrix shift = build_shift(basis, c);
    const ExactMatrix lowering = build_lowering(basis, c);
    const int top = basis.top_weight();
    const std::size_t n = basis.size();

    std::vector<JordanChain> chains;
    for (int r = 0; 2 * r <= top; ++r) {
        const auto& cols = basis.indices_with_weight(r);
        const std::vector<DenseVector> heads = null_space(graded_block(lowering, basis, r, r - 1));
        for (const auto& local : heads) {
            JordanChain chain;
            chain.length = static_cast<std::size_t>(top - 2 * r + 1);
            chain.head_weight = r;
            DenseVector v(n, Rational(0));
            for (std::size_t p = 0; p < cols.size(); ++p) v[cols[p]] = local[p];
            chain.vectors.push_back(std::move(v));
            while (chain.vectors.size() < chain.length) chain.vectors.push_back(shift.apply(chain.vectors.back()));
            chains.push_back(std::move(chain));
        }
    }

    for (const auto& chain : chains) {
        const DenseVector tail = shift.apply(chain.vectors.back());
        for (const auto& x : tail) {
            if (x != 0) {
                throw IntegrityError("chain headed at weight " + std::to_string(chain.head_weight) +
                                     " is not annihilated after " + std::to_string(chain.length) + " steps");
            }
        }
    }

    const ChainBasis pj = assemble_chain_basis(chains, n);
    if (!(shift * pj.p == pj.p * pj.j)) {
        throw IntegrityError("M P != P J for sector (" + std::to_string(ell) + ", " + std::to_string(m) + ")");
    }
    if (exact_rank(pj.p) != n) {
        throw IntegrityError("chain vectors do not form a basis of sector (" + std::to_string(ell) + ", " +
                             std::to_string(m) + ")");
    }
    BlockCounts chain_blocks;
    for (const auto& chain : chains) ++chain_blocks[chain.length];
    if (chain_blocks != report.computed_blocks || !report.verified) {
        throw IntegrityError("block counts disagree for sector (" + std::to_string(ell) + ", " +
                             std::to_string(m) + ")");
    }
    report.chains = std::move(chains);
    report.verified = true;
    return report;
}

ConjectureCheck prosen_conjecture_check(int ell, int m, const Couplings& c) {
    const SectorBasis basis = enumerate_sector(ell, m);
    const ExactMatrix shift = build_shift(basis, c);
    ConjectureCheck out;
    out.proper_eigenstate_count = basis.size() - exact_rank(shift);
    out.middle_sector_dim = basis.indices_with_weight(basis.top_weight() / 2).size();
    out.equal = out.proper_eigenstate_count == out.middle_sector_dim;
    return out;
}

} // namespace fockjordan
