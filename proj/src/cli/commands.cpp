#include "fockjordan/cli.hpp"

#include "fockjordan/errors.hpp"
#include "fockjordan/qgrade.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <exception>
#include <ostream>
#include <thread>

namespace fockjordan::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <typename T>
std::string join(const std::vector<T>& values, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

std::string format_blocks(const BlockCounts& blocks) {
    std::string out;
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        for (std::size_t k = 0; k < it->second; ++k) {
            if (!out.empty()) out += ",";
            out += std::to_string(it->first);
        }
    }
    return out;
}

enum class CouplingKind { Uniform, Random, File };

struct CouplingSource {
    CouplingKind kind = CouplingKind::Uniform;
    std::string path;
    std::uint64_t seed = 0;

    Couplings for_ell(int ell) const {
        switch (kind) {
        case CouplingKind::Random:
            return random_couplings(ell, seed);
        case CouplingKind::File:
            return load_couplings_file(path, ell);
        case CouplingKind::Uniform:
            break;
        }
        return Couplings::uniform(ell);
    }

    std::string describe() const {
        switch (kind) {
        case CouplingKind::Random:
            return "random(seed=" + std::to_string(seed) + ")";
        case CouplingKind::File:
            return "file(" + path + ")";
        case CouplingKind::Uniform:
            break;
        }
        return "uniform";
    }
};

CouplingSource make_source(const std::string& spec, const CLI::Option* seed_opt, std::uint64_t seed,
                           bool allow_file) {
    CouplingSource src;
    if (spec == "random") {
        if (seed_opt->count() == 0) throw UsageError("--couplings random requires --seed");
        src.kind = CouplingKind::Random;
        src.seed = seed;
        return src;
    }
    if (seed_opt->count() > 0) throw UsageError("--seed is only valid with --couplings random");
    if (spec == "uniform") return src;
    if (!allow_file) throw UsageError("--couplings must be 'uniform' or 'random'");
    src.kind = CouplingKind::File;
    src.path = spec;
    return src;
}

std::vector<int> parse_m_values(const std::string& text, int ell) {
    std::vector<int> out;
    if (text == "all") {
        for (int m = 0; m <= ell; ++m) out.push_back(m);
        return out;
    }
    int m = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), m);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw UsageError("--m must be an integer or 'all', got '" + text + "'");
    }
    if (m < 0 || m > ell) {
        throw UsageError("--m must lie in [0, ell], got m=" + text + " with ell=" + std::to_string(ell));
    }
    out.push_back(m);
    return out;
}

void check_ell(int ell) {
    if (ell < 1 || ell > kMaxSites) {
        throw UsageError("--ell must lie in [1, 64], got " + std::to_string(ell));
    }
}

// ---- analyze ----

struct AnalyzeArgs {
    int ell = 0;
    std::string m = "all";
    std::string couplings = "uniform";
    std::uint64_t seed = 0;
    bool chains = false;
    bool json = false;
    std::size_t dmax = 0;
    CLI::Option* seed_opt = nullptr;
    CLI::Option* dmax_opt = nullptr;
};

void print_report_table(const JordanReport& report, const Couplings& c, const std::string& couplings,
                        std::ostream& out) {
    const SectorBasis basis = enumerate_sector(report.ell, report.m);
    out << "sector ell=" << report.ell << " m=" << report.m << " dim=" << basis.size()
        << " couplings=" << couplings << "\n";
    out << "  sector dims:          " << join(report.sector_dims) << "\n";
    out << "  increments predicted: " << join(report.predicted_increments) << "\n";
    out << "  increments: " << join(report.profile.increments) << " | blocks: "
        << format_blocks(report.computed_blocks) << " | " << (report.verified ? "MATCH" : "MISMATCH")
        << "\n";
    if (!report.verified) {
        out << "  predicted blocks: " << format_blocks(report.predicted_blocks) << "\n";
    }
    if (report.chains) {
        const ExactMatrix shift = build_shift(basis, c);
        out << "  chains (" << report.chains->size() << "):\n";
        for (const auto& chain : *report.chains) {
            out << "    length " << chain.length << ", head weight " << chain.head_weight
                << ": head " << format_vector(chain.vectors.front(), basis) << "\n";
            out << "      kernel vector " << format_vector(chain.vectors.back(), basis) << "\n";
        }
    }
}

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out) {
    check_ell(args.ell);
    const std::vector<int> ms = parse_m_values(args.m, args.ell);
    const CouplingSource source = make_source(args.couplings, args.seed_opt, args.seed, true);
    const Couplings c = source.for_ell(args.ell);

    std::optional<std::size_t> dmax;
    if (args.dmax_opt->count() > 0) {
        for (int m : ms) {
            const auto needed = static_cast<std::size_t>(m * (args.ell - m) + 1);
            if (args.dmax < needed) {
                throw UsageError("--dmax must be at least m(ell-m)+1 = " + std::to_string(needed) +
                                 " for sector m=" + std::to_string(m));
            }
        }
        dmax = args.dmax;
    }

    std::vector<JordanReport> reports;
    for (int m : ms) {
        JordanReport report = args.chains ? build_chains(args.ell, m, c) : analyze_sector(args.ell, m, c, dmax);
        if (args.chains && dmax) {
            // Chains fix the profile at the nilpotency bound; extend to dmax.
            report.profile = kernel_profile(build_shift(enumerate_sector(args.ell, m), c), dmax);
        }
        reports.push_back(std::move(report));
    }

    if (args.json) {
        nlohmann::json j;
        if (ms.size() == 1) {
            j = report_to_json(reports.front());
        } else {
            j = nlohmann::json::array();
            for (const auto& r : reports) j.push_back(report_to_json(r));
        }
        out << j.dump(2) << "\n";
    } else {
        for (const auto& r : reports) print_report_table(r, c, source.describe(), out);
    }
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const JordanReport& r) { return r.verified; });
    return ok ? kExitOk : kExitCheckFailed;
}

// ---- qbin ----

int cmd_qbin(int ell, int m, bool json, std::ostream& out) {
    if (ell < 0 || ell > kMaxSites) throw UsageError("ell must lie in [0, 64], got " + std::to_string(ell));
    if (m < 0 || m > ell) {
        throw UsageError("m must lie in [0, ell], got m=" + std::to_string(m) + " with ell=" + std::to_string(ell));
    }
    const QPolynomial poly = q_binomial(ell, m);
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : poly.coefficients()) {
        if (c.fits_ulong_p()) {
            coeffs.push_back(static_cast<std::uint64_t>(c.get_ui()));
        } else {
            coeffs.push_back(c.get_str());
        }
    }
    if (json) {
        nlohmann::json j;
        j["ell"] = ell;
        j["m"] = m;
        j["polynomial"] = poly.to_string();
        j["coefficients"] = std::move(coeffs);
        out << j.dump(2) << "\n";
    } else {
        out << poly.to_string() << "\n" << coeffs.dump() << "\n";
    }
    return kExitOk;
}

// ---- verify ----

constexpr std::array<const char*, 5> kCheckNames = {"sl2", "injectivity", "kernel", "grading", "chains"};

struct SectorOutcome {
    int ell = 0;
    int m = 0;
    std::array<bool, kCheckNames.size()> passed{};
    std::array<std::string, kCheckNames.size()> detail;

    bool all_passed() const {
        return std::all_of(passed.begin(), passed.end(), [](bool b) { return b; });
    }
};

template <typename Fn>
void run_check(SectorOutcome& outcome, std::size_t index, Fn&& fn) {
    try {
        outcome.passed[index] = fn(outcome.detail[index]);
    } catch (const std::exception& e) {
        outcome.passed[index] = false;
        outcome.detail[index] = e.what();
    }
}

SectorOutcome check_sector(int ell, int m, const Couplings& c) {
    SectorOutcome outcome;
    outcome.ell = ell;
    outcome.m = m;
    run_check(outcome, 0, [&](std::string& detail) {
        const Sl2Report report = verify_sl2(ell, m, c);
        for (const auto& rel : report.relations) {
            if (!rel.holds) {
                detail = rel.name + " fails, max offending entry " + to_fraction_string(*rel.max_offending);
                return false;
            }
        }
        return true;
    });
    run_check(outcome, 1, [&](std::string& detail) {
        const bool ok = matches_injectivity_thresholds(injectivity_surjectivity_table(ell, m, c), ell, m);
        if (!ok) detail = "graded maps violate the injectivity/surjectivity thresholds";
        return ok;
    });
    run_check(outcome, 2, [&](std::string& detail) {
        const JordanReport report = analyze_sector(ell, m, c);
        if (report.profile.increments != report.predicted_increments) {
            detail = "increments " + join(report.profile.increments) + " vs predicted " +
                     join(report.predicted_increments);
            return false;
        }
        const int top = m * (ell - m);
        if (0 < m && m < ell) {
            for (const auto& [size, count] : report.computed_blocks) {
                if ((top - static_cast<int>(size)) % 2 == 0) {
                    detail = "block of size " + std::to_string(size) + " violates the parity law";
                    return false;
                }
            }
        }
        const ConjectureCheck conj = prosen_conjecture_check(ell, m, c);
        if (!conj.equal) {
            detail = "dim ker M = " + std::to_string(conj.proper_eigenstate_count) + " but middle weight space has " +
                     std::to_string(conj.middle_sector_dim);
            return false;
        }
        return report.verified;
    });
    run_check(outcome, 3, [&](std::string& detail) {
        const auto dims = sector_weight_dimensions(enumerate_sector(ell, m));
        const QPolynomial poly = q_binomial(ell, m);
        if (poly.coefficients().size() != dims.size()) {
            detail = "q-binomial degree differs from m(ell-m)";
            return false;
        }
        for (std::size_t r = 0; r < dims.size(); ++r) {
            if (poly.coefficients()[r] != dims[r]) {
                detail = "weight " + std::to_string(r) + ": " + std::to_string(dims[r]) + " states vs coefficient " +
                         poly.coefficients()[r].get_str();
                return false;
            }
        }
        return true;
    });
    run_check(outcome, 4, [&](std::string&) { return build_chains(ell, m, c).verified; });
    return outcome;
}

int cmd_verify(int ell_max, const CouplingSource& source, bool json, std::ostream& out) {
    if (ell_max < 1 || ell_max > kMaxSites) {
        throw UsageError("--ell-max must lie in [1, 64], got " + std::to_string(ell_max));
    }
    struct Job {
        int ell;
        int m;
    };
    std::vector<Job> jobs;
    for (int ell = 1; ell <= ell_max; ++ell) {
        for (int m = 0; m <= ell; ++m) jobs.push_back({ell, m});
    }
    std::vector<Couplings> couplings;
    for (int ell = 1; ell <= ell_max; ++ell) couplings.push_back(source.for_ell(ell));

    std::vector<SectorOutcome> outcomes(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            const Job& job = jobs[i];
            outcomes[i] = check_sector(job.ell, job.m, couplings[static_cast<std::size_t>(job.ell - 1)]);
        }
    };
    const unsigned threads = std::max(1U, std::min<unsigned>(std::thread::hardware_concurrency(), 16U));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();

    const auto failure = std::find_if(outcomes.begin(), outcomes.end(),
                                      [](const SectorOutcome& o) { return !o.all_passed(); });
    std::string failure_text;
    if (failure != outcomes.end()) {
        for (std::size_t k = 0; k < kCheckNames.size(); ++k) {
            if (!failure->passed[k]) {
                failure_text = "ell=" + std::to_string(failure->ell) + " m=" + std::to_string(failure->m) +
                               " check=" + kCheckNames[k] + ": " + failure->detail[k];
                break;
            }
        }
    }

    if (json) {
        nlohmann::json j;
        j["ell_max"] = ell_max;
        j["couplings"] = source.describe();
        j["sector_count"] = outcomes.size();
        j["passed"] = failure == outcomes.end();
        nlohmann::json sectors = nlohmann::json::array();
        for (const auto& o : outcomes) {
            nlohmann::json s;
            s["ell"] = o.ell;
            s["m"] = o.m;
            for (std::size_t k = 0; k < kCheckNames.size(); ++k) s["checks"][kCheckNames[k]] = o.passed[k];
            sectors.push_back(std::move(s));
        }
        j["sectors"] = std::move(sectors);
        if (!failure_text.empty()) j["first_failure"] = failure_text;
        out << j.dump(2) << "\n";
    } else {
        out << "checks: sl2 injectivity kernel grading chains; couplings=" << source.describe() << "\n";
        out << "ell\\m";
        for (int m = 0; m <= ell_max; ++m) out << ' ' << (m < 10 ? " " : "") << m;
        out << "\n";
        std::size_t i = 0;
        for (int ell = 1; ell <= ell_max; ++ell) {
            out << (ell < 10 ? "    " : "   ") << ell;
            for (int m = 0; m <= ell; ++m, ++i) out << "  " << (outcomes[i].all_passed() ? '.' : 'F');
            out << "\n";
        }
        if (failure == outcomes.end()) {
            out << "all " << outcomes.size() << " sectors pass (" << kCheckNames.size() << " checks each)\n";
        } else {
            out << "FAIL " << failure_text << "\n";
        }
    }
    return failure == outcomes.end() ? kExitOk : kExitCheckFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Jordan structure of the fermionic nilpotent shift operator"};
    app.name("fockjordan");
    app.require_subcommand(1);

    AnalyzeArgs analyze;
    auto* analyze_cmd = app.add_subcommand("analyze", "Kernel profile and Jordan blocks of M on (ell, m) sectors");
    analyze_cmd->add_option("--ell", analyze.ell, "number of sites")->required();
    analyze_cmd->add_option("--m", analyze.m, "particle number or 'all'")->required();
    analyze_cmd->add_option("--couplings", analyze.couplings, "'uniform', 'random', or a coupling file");
    analyze.seed_opt = analyze_cmd->add_option("--seed", analyze.seed, "seed for random couplings");
    analyze_cmd->add_flag("--chains", analyze.chains, "build and verify an explicit Jordan basis");
    analyze_cmd->add_flag("--json", analyze.json, "emit JSON");
    analyze.dmax_opt = analyze_cmd->add_option("--dmax", analyze.dmax, "largest power of M to examine");

    int qbin_ell = 0;
    int qbin_m = 0;
    bool qbin_json = false;
    auto* qbin_cmd = app.add_subcommand("qbin", "Gaussian binomial coefficient [ell m]_q");
    qbin_cmd->add_option("ell", qbin_ell)->required();
    qbin_cmd->add_option("m", qbin_m)->required();
    qbin_cmd->add_flag("--json", qbin_json, "emit JSON");

    int ell_max = 10;
    std::string verify_couplings = "uniform";
    std::uint64_t verify_seed = 0;
    bool verify_json = false;
    auto* verify_cmd = app.add_subcommand("verify", "Sweep all sectors with ell <= ell-max");
    verify_cmd->add_option("--ell-max", ell_max, "largest ell to sweep");
    verify_cmd->add_option("--couplings", verify_couplings, "'uniform' or 'random'");
    auto* verify_seed_opt = verify_cmd->add_option("--seed", verify_seed, "seed for random couplings");
    verify_cmd->add_flag("--json", verify_json, "emit JSON");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*analyze_cmd) return cmd_analyze(analyze, out);
        if (*qbin_cmd) return cmd_qbin(qbin_ell, qbin_m, qbin_json, out);
        const CouplingSource source = make_source(verify_couplings, verify_seed_opt, verify_seed, false);
        return cmd_verify(ell_max, source, verify_json, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IntegrityError& e) {
        err << "integrity failure: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}

} // namespace fockjordan::cli
