#include "fockjordan/fock.hpp"

#include "fockjordan/errors.hpp"

#include <bit>
#include <string>

namespace fockjordan {

namespace {

// Refuse to materialize sectors beyond this many states.
constexpr long double kMaxSectorStates = 1 << 26;

long double approx_binomial(int n, int k) {
    long double result = 1;
    for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

// Reverses the low `ell` bits so that nu_1 becomes the most significant digit.
std::uint64_t lex_key(std::uint64_t bits, int ell) {
    std::uint64_t key = 0;
    for (int k = 0; k < ell; ++k) {
        key = (key << 1) | ((bits >> k) & 1U);
    }
    return key;
}

} // namespace

OccupationState::OccupationState(int ell, std::uint64_t bits) : ell_(ell), bits_(bits) {
    if (ell < 1 || ell > kMaxSites) {
        throw DomainError("ell must lie in [1, 64], got ell=" + std::to_string(ell));
    }
    if (ell < 64 && (bits >> ell) != 0) {
        throw DomainError("occupation bits exceed ell=" + std::to_string(ell));
    }
}

OccupationState OccupationState::from_occupations(const std::vector<int>& nu) {
    std::uint64_t bits = 0;
    for (std::size_t k = 0; k < nu.size(); ++k) {
        if (nu[k] != 0 && nu[k] != 1) {
            throw DomainError("occupation numbers must be 0 or 1");
        }
        if (nu[k] == 1) bits |= std::uint64_t{1} << k;
    }
    return OccupationState(static_cast<int>(nu.size()), bits);
}

OccupationState OccupationState::from_string(const std::string& text) {
    std::vector<int> nu;
    nu.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw DomainError("occupation string must contain only 0 and 1: '" + text + "'");
        }
        nu.push_back(c - '0');
    }
    return from_occupations(nu);
}

int OccupationState::particles() const { return std::popcount(bits_); }

int OccupationState::occupied_before(int site) const {
    if (site <= 1) return 0;
    const std::uint64_t mask = site - 1 >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (site - 1)) - 1;
    return std::popcount(bits_ & mask);
}

OccupationState OccupationState::with(int site, bool value) const {
    OccupationState out = *this;
    const std::uint64_t bit = std::uint64_t{1} << (site - 1);
    out.bits_ = value ? (bits_ | bit) : (bits_ & ~bit);
    return out;
}

std::string OccupationState::to_string() const {
    std::string s(static_cast<std::size_t>(ell_), '0');
    for (int k = 1; k <= ell_; ++k) {
        if (occupied(k)) s[static_cast<std::size_t>(k - 1)] = '1';
    }
    return s;
}

bool lex_less(const OccupationState& a, const OccupationState& b) {
    return lex_key(a.bits_, a.ell_) < lex_key(b.bits_, b.ell_);
}

int weight(const OccupationState& state) {
    const int m = state.particles();
    int sum = 0;
    for (int k = 1; k <= state.sites(); ++k) {
        if (state.occupied(k)) sum += k;
    }
    return sum - m * (m + 1) / 2;
}

std::size_t SectorBasis::index_of(const OccupationState& state) const {
    if (state.sites() != ell_) {
        throw DomainError("state has " + std::to_string(state.sites()) + " sites, sector has " +
                          std::to_string(ell_));
    }
    const auto it = index_of_.find(state.bits());
    if (it == index_of_.end()) {
        throw DomainError("state " + state.to_string() + " is not in the m=" + std::to_string(m_) +
                          " sector");
    }
    return it->second;
}

bool SectorBasis::contains(const OccupationState& state) const {
    return state.sites() == ell_ && index_of_.contains(state.bits());
}

const std::vector<std::size_t>& SectorBasis::indices_with_weight(int r) const {
    static const std::vector<std::size_t> empty;
    if (r < 0 || r > top_weight()) return empty;
    return by_weight_[static_cast<std::size_t>(r)];
}

std::size_t SectorBasis::min_index() const { return by_weight_.front().front(); }

std::size_t SectorBasis::max_index() const { return by_weight_.back().front(); }

SectorBasis enumerate_sector(int ell, int m) {
    if (ell < 1) {
        throw DomainError("ell must be at least 1, got ell=" + std::to_string(ell));
    }
    if (ell > kMaxSites) {
        throw DomainError("ell must be at most 64, got ell=" + std::to_string(ell));
    }
    if (m < 0 || m > ell) {
        throw DomainError("m must lie in [0, ell], got m=" + std::to_string(m) +
                          " with ell=" + std::to_string(ell));
    }
    if (approx_binomial(ell, m) > kMaxSectorStates) {
        throw DomainError("sector (ell=" + std::to_string(ell) + ", m=" + std::to_string(m) +
                          ") is too large to enumerate");
    }

    SectorBasis basis;
    basis.ell_ = ell;
    basis.m_ = m;
    basis.by_weight_.resize(static_cast<std::size_t>(m * (ell - m) + 1));

    // Gosper's hack walks m-subsets in increasing order of the lex key, whose
    // most significant bit is nu_1. 128-bit arithmetic avoids overflow at ell=64.
    using Key = unsigned __int128;
    const Key end = Key{1} << ell;
    Key key = m == 0 ? 0 : (Key{1} << m) - 1;
    while (key < end) {
        std::uint64_t bits = 0;
        for (int k = 1; k <= ell; ++k) {
            if ((key >> (ell - k)) & 1U) bits |= std::uint64_t{1} << (k - 1);
        }
        OccupationState state(ell, bits);
        const int w = weight(state);
        basis.index_of_.emplace(bits, basis.states_.size());
        basis.by_weight_[static_cast<std::size_t>(w)].push_back(basis.states_.size());
        basis.states_.push_back(state);
        basis.weight_of_.push_back(w);
        if (key == 0) break;
        const Key lowest = key & (~key + 1);
        const Key ripple = key + lowest;
        key = (((ripple ^ key) >> 2) / lowest) | ripple;
    }
    return basis;
}

std::vector<std::size_t> sector_weight_dimensions(const SectorBasis& basis) {
    std::vector<std::size_t> dims(static_cast<std::size_t>(basis.top_weight() + 1), 0);
    for (int w : basis.weights()) ++dims[static_cast<std::size_t>(w)];
    return dims;
}

} // namespace fockjordan
