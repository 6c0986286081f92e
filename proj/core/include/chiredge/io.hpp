#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "chiredge/ensemble.hpp"
#include "chiredge/fredholm.hpp"
#include "chiredge/stats.hpp"

#include "json.hpp"

namespace chiredge::io {

// Every file starts with a single '#'-prefixed JSON line carrying the tool
// version, the full configuration, and the master seed, so a result file is
// reproducible from its own header. No timestamps: identical runs produce
// identical bytes.
std::string header_line(const nlohmann::json& config);

// Doubles are printed round-trip exact.
std::string fmt(double x);

void write_eigenvalues_csv(std::ostream& os, const ensemble::EigenvalueSample& s);
nlohmann::json eigenvalues_json(const ensemble::EigenvalueSample& s);

// Generic grid dump: one row per point.
void write_grid_csv(std::ostream& os, const nlohmann::json& config,
                    const std::vector<std::string>& columns,
                    const std::vector<std::vector<double>>& rows);

void write_cdf_csv(std::ostream& os, const nlohmann::json& config,
                   const fredholm::CdfTable& table);

nlohmann::json ecdf_json(const stats::EcdfSummary& s);

}  // namespace chiredge::io
