#include "fockjordan/cli.hpp"

namespace fockjordan::cli {

nlohmann::json report_to_json(const JordanReport& report) {
    nlohmann::json j;
    j["ell"] = report.ell;
    j["m"] = report.m;
    j["sector_dims"] = report.sector_dims;
    j["increments_computed"] = report.profile.increments;
    j["increments_predicted"] = report.predicted_increments;
    nlohmann::json blocks = nlohmann::json::object();
    for (const auto& [size, count] : report.computed_blocks) blocks[std::to_string(size)] = count;
    j["blocks"] = std::move(blocks);
    j["verified"] = report.verified;
    if (report.chains) {
        nlohmann::json chains = nlohmann::json::array();
        for (const auto& chain : *report.chains) {
            nlohmann::json vectors = nlohmann::json::array();
            for (const auto& v : chain.vectors) {
                nlohmann::json coords = nlohmann::json::array();
                for (const auto& x : v) coords.push_back(to_fraction_string(x));
                vectors.push_back(std::move(coords));
            }
            chains.push_back(std::move(vectors));
        }
        j["chains"] = std::move(chains);
    }
    return j;
}

std::string format_vector(const DenseVector& v, const SectorBasis& basis) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (!out.empty()) out += ' ';
        out += v[i] > 0 ? "+" : "";
        out += v[i].get_str();
        out += "|" + basis.state(i).to_string() + ">";
    }
    return out.empty() ? "0" : out;
}

} // namespace fockjordan::cli
