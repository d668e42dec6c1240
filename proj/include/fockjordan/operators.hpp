#pragma once

#include "fockjordan/fock.hpp"
#include "fockjordan/matrix.hpp"
#include "fockjordan/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fockjordan {

/// Hopping amplitudes c_1..c_{ell-1} of the shift operator; all nonzero.
class Couplings {
public:
    /// Throws DomainError naming k when some c_k is zero.
    explicit Couplings(std::vector<Rational> values);
    /// c_k = 1 for all k.
    static Couplings uniform(int ell);

    std::size_t size() const { return values_.size(); }
    /// c_k for 1 <= k <= size().
    const Rational& at(int k) const { return values_[static_cast<std::size_t>(k - 1)]; }
    const std::vector<Rational>& values() const { return values_; }
    bool is_uniform_one() const;

private:
    std::vector<Rational> values_;
};

SectorTag sector_tag(const SectorBasis& basis);

/// amplitude * b'_{create} b_{annihilate} restricted to the sector. Matrix
/// elements carry the string sign from the ordered-product basis
/// b'_1^{nu_1} ... b'_ell^{nu_ell} |right>.
ExactMatrix apply_bilinear(const SectorBasis& basis, int create_site, int annihilate_site,
                           const Rational& amplitude);

/// M = sum_k c_k b'_{k+1} b_k.
ExactMatrix build_shift(const SectorBasis& basis, const Couplings& c);

/// M' = sum_k k(ell-k)/c_k b'_k b_{k+1}, the partner of M in the sl2 triple.
ExactMatrix build_lowering(const SectorBasis& basis, const Couplings& c);

struct DiagonalOperators {
    ExactMatrix z;      ///< sum_k (2k - ell - 1) b'_k b_k
    ExactMatrix number; ///< N
    ExactMatrix omega;  ///< weight operator
};

DiagonalOperators build_diagonals(const SectorBasis& basis);

/// AB - BA. Throws DomainError unless both are square of the same size.
ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);

struct RelationCheck {
    std::string name;
    bool holds = false;
    /// Largest |entry| of lhs - rhs when the relation fails.
    std::optional<Rational> max_offending;
};

struct Sl2Report {
    std::vector<RelationCheck> relations;
    bool all_hold() const;
};

/// Checks [Z,M] = 2M, [Z,M'] = -2M', [M,M'] = Z exactly on the sector.
Sl2Report verify_sl2(int ell, int m, const Couplings& c);

} // namespace fockjordan
