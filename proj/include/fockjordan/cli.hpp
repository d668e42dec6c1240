#pragma once

#include "fockjordan/fock.hpp"
#include "fockjordan/jordan.hpp"
#include "fockjordan/errors.hpp"
#include "fockjordan/operators.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fockjordan::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Malformed or invalid coupling file; `line` is 1-based (0 when the problem
/// is the overall count).
class CouplingFileError : public DomainError {
public:
    CouplingFileError(std::size_t line, const std::string& what)
        : DomainError(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// One rational per line ("num/den" or an integer), '#' starts a comment,
/// blank lines are skipped; exactly ell-1 values.
Couplings parse_couplings(std::istream& in, int ell);
Couplings load_couplings_file(const std::string& path, int ell);

/// c_k = num/den with num uniform in [-9,9]\{0} and den uniform in [1,9],
/// drawn from a generator seeded by (seed, ell).
Couplings random_couplings(int ell, std::uint64_t seed);

/// Sector report in the documented JSON layout; rationals as "num/den".
nlohmann::json report_to_json(const JordanReport& report);

/// "+1|1001> -1|0110>" over the occupation basis, zero coordinates skipped.
std::string format_vector(const DenseVector& v, const SectorBasis& basis);

/// Runs one command line (without the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fockjordan::cli
