// io.cpp

#include "tphonon/io.hpp"

#include <cstdio>
#include <fstream>

#include "tphonon/errors.hpp"

namespace tphonon::io {

void ensure_directory(const std::filesystem::path& dir) {
    if (dir.empty()) {
        return;
    }
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
    }
}

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    ensure_directory(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    for (std::size_t i = 0; i < header.size(); ++i) {
        out << (i ? "," : "") << header[i];
    }
    out << '\n';
    char buf[32];
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", row[i]);
            out << (i ? "," : "") << buf;
        }
        out << '\n';
    }
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
}

void write_json(const std::filesystem::path& path, const nlohmann::json& doc) {
    ensure_directory(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << doc.dump(2) << '\n';
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
}

nlohmann::json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ArgumentError(path.string() + ": invalid JSON: " + e.what());
    }
}

nlohmann::json quantity(double value, const std::string& unit) {
    return {{"value", value}, {"unit", unit}};
}

nlohmann::json to_json(const fourier::LogFit& fit) {
    return {
        {"a", fit.a},
        {"b", fit.b},
        {"kr_min", fit.kr_min},
        {"kr_max", fit.kr_max},
        {"residual_rms", fit.residual},
    };
}

fourier::LogFit log_fit_from_json(const nlohmann::json& doc) {
    const auto& node = doc.contains("fit") ? doc.at("fit") : doc;
    try {
        fourier::LogFit fit;
        fit.a = node.at("a").get<double>();
        fit.b = node.at("b").get<double>();
        fit.kr_min = node.at("kr_min").get<double>();
        fit.kr_max = node.at("kr_max").get<double>();
        fit.residual = node.value("residual_rms", 0.0);
        if (!(fit.a > 0.0) || !(fit.b > 0.0) || !(fit.kr_max > fit.kr_min)) {
            throw ArgumentError("log fit must have a > 0, b > 0 and kr_min < kr_max");
        }
        return fit;
    } catch (const nlohmann::json::exception& e) {
        throw ArgumentError(std::string("malformed log-fit JSON: ") + e.what());
    }
}

} // namespace tphonon::io
