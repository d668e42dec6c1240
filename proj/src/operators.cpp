#include "fockjordan/operators.hpp"

#include "fockjordan/errors.hpp"

#include <algorithm>
#include <utility>

namespace fockjordan {

Couplings::Couplings(std::vector<Rational> values) : values_(std::move(values)) {
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (values_[k] == 0) {
            throw DomainError("coupling c_" + std::to_string(k + 1) + " is zero");
        }
    }
}

Couplings Couplings::uniform(int ell) {
    return Couplings(std::vector<Rational>(static_cast<std::size_t>(std::max(ell - 1, 0)), Rational(1)));
}

bool Couplings::is_uniform_one() const {
    return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return v == 1; });
}

SectorTag sector_tag(const SectorBasis& basis) { return {basis.ell(), basis.m(), std::nullopt}; }

ExactMatrix apply_bilinear(const SectorBasis& basis, int create_site, int annihilate_site,
                           const Rational& amplitude) {
    const int ell = basis.ell();
    if (create_site < 1 || create_site > ell) {
        throw DomainError("create_site=" + std::to_string(create_site) + " outside [1, " +
                          std::to_string(ell) + "]");
    }
    if (annihilate_site < 1 || annihilate_site > ell) {
        throw DomainError("annihilate_site=" + std::to_string(annihilate_site) + " outside [1, " +
                          std::to_string(ell) + "]");
    }
    const SectorTag tag = sector_tag(basis);
    MatrixBuilder builder(basis.size(), basis.size(), tag, tag);
    if (amplitude == 0) return std::move(builder).build();

    for (std::size_t col = 0; col < basis.size(); ++col) {
        const OccupationState& src = basis.state(col);
        if (!src.occupied(annihilate_site)) continue;
        const OccupationState mid = src.with(annihilate_site, false);
        if (mid.occupied(create_site)) continue;
        const OccupationState dst = mid.with(create_site, true);
        const int crossings = src.occupied_before(annihilate_site) + mid.occupied_before(create_site);
        const Rational value = crossings % 2 == 0 ? amplitude : Rational(-amplitude);
        builder.add(basis.index_of(dst), col, value);
    }
    return std::move(builder).build();
}

namespace {

void check_couplings(const SectorBasis& basis, const Couplings& c) {
    const auto expected = static_cast<std::size_t>(basis.ell() - 1);
    if (c.size() != expected) {
        throw DomainError("expected " + std::to_string(expected) + " couplings for ell=" +
                          std::to_string(basis.ell()) + ", got " + std::to_string(c.size()));
    }
}

} // namespace

ExactMatrix build_shift(const SectorBasis& basis, const Couplings& c) {
    check_couplings(basis, c);
    const SectorTag tag = sector_tag(basis);
    ExactMatrix out(basis.size(), basis.size(), tag, tag);
    for (int k = 1; k < basis.ell(); ++k) out = out + apply_bilinear(basis, k + 1, k, c.at(k));
    return out;
}

ExactMatrix build_lowering(const SectorBasis& basis, const Couplings& c) {
    check_couplings(basis, c);
    const SectorTag tag = sector_tag(basis);
    const int ell = basis.ell();
    ExactMatrix out(basis.size(), basis.size(), tag, tag);
    for (int k = 1; k < ell; ++k) {
        const Rational amplitude = Rational(k * (ell - k)) / c.at(k);
        out = out + apply_bilinear(basis, k, k + 1, amplitude);
    }
    return out;
}

DiagonalOperators build_diagonals(const SectorBasis& basis) {
    const int ell = basis.ell();
    std::vector<Rational> z;
    std::vector<Rational> n;
    std::vector<Rational> omega;
    z.reserve(basis.size());
    n.reserve(basis.size());
    omega.reserve(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const OccupationState& s = basis.state(i);
        int zv = 0;
        for (int k = 1; k <= ell; ++k) {
            if (s.occupied(k)) zv += 2 * k - ell - 1;
        }
        z.emplace_back(zv);
        n.emplace_back(s.particles());
        omega.emplace_back(basis.weight_of(i));
    }
    const SectorTag tag = sector_tag(basis);
    return {ExactMatrix::diagonal(z, tag), ExactMatrix::diagonal(n, tag), ExactMatrix::diagonal(omega, tag)};
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
        throw DomainError("commutator needs square matrices of equal size, got " +
                          std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " and " +
                          std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    return a * b - b * a;
}

bool Sl2Report::all_hold() const {
    return std::all_of(relations.begin(), relations.end(), [](const RelationCheck& r) { return r.holds; });
}

namespace {

RelationCheck check_relation(std::string name, const ExactMatrix& lhs, const ExactMatrix& rhs) {
    const ExactMatrix diff = lhs - rhs;
    RelationCheck out{std::move(name), diff.is_zero(), std::nullopt};
    if (!out.holds) out.max_offending = diff.max_abs_entry();
    return out;
}

} // namespace

Sl2Report verify_sl2(int ell, int m, const Couplings& c) {
    const SectorBasis basis = enumerate_sector(ell, m);
    const ExactMatrix shift = build_shift(basis, c);
    const ExactMatrix lowering = build_lowering(basis, c);
    const ExactMatrix z = build_diagonals(basis).z;
    Sl2Report report;
    report.relations.push_back(check_relation("[Z,M]=2M", commutator(z, shift), shift.scaled(2)));
    report.relations.push_back(check_relation("[Z,M']=-2M'", commutator(z, lowering), lowering.scaled(-2)));
    report.relations.push_back(check_relation("[M,M']=Z", commutator(shift, lowering), z));
    return report;
}

} // namespace fockjordan
