#include "chiredge/io.hpp"

#include <array>
#include <charconv>

#ifndef CHIREDGE_VERSION
#define CHIREDGE_VERSION "0.0.0"
#endif

namespace chiredge::io {

std::string fmt(double x) {
    std::array<char, 32> buf;
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), res.ptr);
}

std::string header_line(const nlohmann::json& config) {
    nlohmann::json j = config;
    j["version"] = CHIREDGE_VERSION;
    return "# " + j.dump();
}

void write_eigenvalues_csv(std::ostream& os, const ensemble::EigenvalueSample& s) {
    os << header_line(eigenvalues_json(s)["config"]) << "\n";
    os << "re,im\n";
    for (const auto& z : s.z) os << fmt(z.real()) << ',' << fmt(z.imag()) << "\n";
}

nlohmann::json eigenvalues_json(const ensemble::EigenvalueSample& s) {
    nlohmann::json config{{"kind", "eigenvalues"},
                          {"n", s.params.n},
                          {"nu", s.params.nu},
                          {"tau", s.params.tau},
                          {"master_seed", s.master_seed},
                          {"trial", s.trial}};
    nlohmann::json z = nlohmann::json::array();
    for (const auto& v : s.z) z.push_back({v.real(), v.imag()});
    return nlohmann::json{{"config", config}, {"z", z}};
}

void write_grid_csv(std::ostream& os, const nlohmann::json& config,
                    const std::vector<std::string>& columns,
                    const std::vector<std::vector<double>>& rows) {
    os << header_line(config) << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i)
        os << (i ? "," : "") << columns[i];
    os << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << fmt(row[i]);
        os << "\n";
    }
}

void write_cdf_csv(std::ostream& os, const nlohmann::json& config,
                   const fredholm::CdfTable& table) {
    std::vector<std::vector<double>> rows;
    rows.reserve(table.t.size());
    for (std::size_t i = 0; i < table.t.size(); ++i)
        rows.push_back({table.t[i], table.F[i], table.err[i]});
    write_grid_csv(os, config, {"t", "F_sigma", "error_estimate"}, rows);
}

nlohmann::json ecdf_json(const stats::EcdfSummary& s) {
    return nlohmann::json{{"trials", s.trials}, {"values", s.values}};
}

}  // namespace chiredge::io
