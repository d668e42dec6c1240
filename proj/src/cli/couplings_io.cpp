#include "fockjordan/cli.hpp"

#include <fstream>
#include <istream>
#include <random>

namespace fockjordan::cli {

Couplings parse_couplings(std::istream& in, int ell) {
    const auto expected = static_cast<std::size_t>(std::max(ell - 1, 0));
    std::vector<Rational> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        Rational value;
        try {
            value = parse_rational(line);
        } catch (const DomainError& e) {
            throw CouplingFileError(line_no, e.what());
        }
        if (value == 0) throw CouplingFileError(line_no, "coupling must be nonzero");
        if (values.size() == expected) {
            throw CouplingFileError(line_no, "more than " + std::to_string(expected) +
                                                 " couplings for ell=" + std::to_string(ell));
        }
        values.push_back(std::move(value));
    }
    if (values.size() != expected) {
        throw CouplingFileError(0, "expected " + std::to_string(expected) + " couplings for ell=" +
                                       std::to_string(ell) + ", found " + std::to_string(values.size()));
    }
    return Couplings(std::move(values));
}

Couplings load_couplings_file(const std::string& path, int ell) {
    std::ifstream in(path);
    if (!in) throw CouplingFileError(0, "cannot open coupling file '" + path + "'");
    return parse_couplings(in, ell);
}

Couplings random_couplings(int ell, std::uint64_t seed) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(ell)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<int> numerator(1, 18);
    std::uniform_int_distribution<int> denominator(1, 9);
    std::vector<Rational> values;
    for (int k = 1; k < ell; ++k) {
        const int draw = numerator(rng);
        const int num = draw <= 9 ? draw - 10 : draw - 9; // [-9,-1] u [1,9]
        Rational c(num, denominator(rng));
        c.canonicalize();
        values.push_back(std::move(c));
    }
    return Couplings(std::move(values));
}

} // namespace fockjordan::cli
