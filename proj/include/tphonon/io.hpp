// io.hpp — CSV / JSON output helpers; all failures surface as IoError with the path

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "tphonon/current_fourier.hpp"

namespace tphonon::io {

inline constexpr int kSchemaVersion = 1;

// Comma-separated, header row, LF line endings, %.17g numbers.
void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

void write_json(const std::filesystem::path& path, const nlohmann::json& doc);
nlohmann::json read_json(const std::filesystem::path& path);

// {"value": v, "unit": unit}
nlohmann::json quantity(double value, const std::string& unit);

nlohmann::json to_json(const fourier::LogFit& fit);
// Accepts a bare fit object or a report with a "fit" member.
fourier::LogFit log_fit_from_json(const nlohmann::json& doc);

void ensure_directory(const std::filesystem::path& dir);

} // namespace tphonon::io
