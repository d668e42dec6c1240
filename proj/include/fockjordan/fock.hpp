#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace fockjordan {

inline constexpr int kMaxSites = 64;

/// Occupation numbers (nu_1, ..., nu_ell) of a fermionic Fock basis vector.
/// Site k is stored in bit k-1 of the word.
class OccupationState {
public:
    OccupationState() = default;
    OccupationState(int ell, std::uint64_t bits);

    /// Builds a state from 0/1 occupations listed site 1 first.
    static OccupationState from_occupations(const std::vector<int>& nu);
    /// Parses a bit string such as "1001" (site 1 leftmost).
    static OccupationState from_string(const std::string& text);

    int sites() const { return ell_; }
    std::uint64_t bits() const { return bits_; }
    int particles() const;

    /// nu_k for 1 <= k <= ell.
    bool occupied(int site) const { return (bits_ >> (site - 1)) & 1U; }
    /// Number of occupied sites strictly left of `site`.
    int occupied_before(int site) const;

    OccupationState with(int site, bool value) const;

    std::string to_string() const;

    friend bool operator==(const OccupationState&, const OccupationState&) = default;

    /// Lexicographic on (nu_1, ..., nu_ell), nu_1 most significant.
    friend bool lex_less(const OccupationState& a, const OccupationState& b);

private:
    int ell_ = 0;
    std::uint64_t bits_ = 0;
};

/// sum_k k nu_k - m(m+1)/2, the eigenvalue of the weight operator.
int weight(const OccupationState& state);

/// All m-particle states on ell sites, in strictly increasing lexicographic
/// order, with their weights and the inverse index map.
class SectorBasis {
public:
    int ell() const { return ell_; }
    int m() const { return m_; }
    /// m(ell - m): the largest weight in the sector.
    int top_weight() const { return m_ * (ell_ - m_); }
    std::size_t size() const { return states_.size(); }

    const std::vector<OccupationState>& states() const { return states_; }
    const OccupationState& state(std::size_t i) const { return states_[i]; }
    const std::vector<int>& weights() const { return weight_of_; }
    int weight_of(std::size_t i) const { return weight_of_[i]; }

    /// Throws DomainError when the state is not in the sector.
    std::size_t index_of(const OccupationState& state) const;
    bool contains(const OccupationState& state) const;

    /// Indices of the states with weight r, ascending.
    const std::vector<std::size_t>& indices_with_weight(int r) const;

    /// Index of |min> = |1..10..0> and |max> = |0..01..1>.
    std::size_t min_index() const;
    std::size_t max_index() const;

private:
    friend SectorBasis enumerate_sector(int ell, int m);

    int ell_ = 0;
    int m_ = 0;
    std::vector<OccupationState> states_;
    std::vector<int> weight_of_;
    std::unordered_map<std::uint64_t, std::size_t> index_of_;
    std::vector<std::vector<std::size_t>> by_weight_;
};

/// Throws DomainError for ell outside [1, 64] or m outside [0, ell].
SectorBasis enumerate_sector(int ell, int m);

/// Entry r is dim V^r, the number of states of weight r, for r = 0..m(ell-m).
std::vector<std::size_t> sector_weight_dimensions(const SectorBasis& basis);

} // namespace fockjordan
