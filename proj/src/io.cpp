#include "umaxpro/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace umaxpro {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_coord(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

void atomic_write(const fs::path& path, const std::string& content) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out) throw IoError("write failed for " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp);
        throw IoError("rename failed for " + path.string() + ": " + ec.message());
    }
}

}  // namespace

void write_design_csv(const fs::path& path, const Design& design) {
    std::ostringstream out;
    for (int s = 0; s < design.n_sim; ++s) {
        for (int v = 0; v < design.n_var; ++v) {
            if (v) out << ',';
            out << format_coord(design.at(s, v));
        }
        out << '\n';
    }
    atomic_write(path, out.str());
}

Design read_design_csv(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::vector<std::vector<double>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            std::size_t pos = 0;
            double x;
            try {
                x = std::stod(field, &pos);
            } catch (const std::exception&) {
                throw IoError(path.string() + ":" + std::to_string(lineno) +
                              ": cannot parse coordinate '" + field + "'");
            }
            while (pos < field.size() && std::isspace(static_cast<unsigned char>(field[pos]))) ++pos;
            if (pos != field.size())
                throw IoError(path.string() + ":" + std::to_string(lineno) +
                              ": trailing characters in coordinate '" + field + "'");
            row.push_back(x);
        }
        if (row.empty())
            throw IoError(path.string() + ":" + std::to_string(lineno) + ": empty row");
        if (!rows.empty() && row.size() != rows.front().size())
            throw IoError(path.string() + ":" + std::to_string(lineno) +
                          ": inconsistent column count");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw IoError(path.string() + ": no data rows");
    Design out(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int s = 0; s < out.n_sim; ++s)
        for (int v = 0; v < out.n_var; ++v)
            out.at(s, v) = rows[s][v];
    return out;
}

fs::path metadata_path(const fs::path& design_path) {
    fs::path p = design_path;
    p += ".meta.json";
    return p;
}

void write_metadata(const fs::path& design_path, const DesignMetadata& meta) {
    json j{{"n_sim", meta.n_sim},
           {"n_var", meta.n_var},
           {"criterion", meta.criterion},
           {"metric", meta.metric},
           {"placement", meta.placement},
           {"alpha", meta.alpha},
           {"t_init", meta.t_init},
           {"t_min", meta.t_min},
           {"moves_per_temp", meta.moves_per_temp},
           {"stall_limit", meta.stall_limit},
           {"seed", meta.seed},
           {"objective", meta.objective},
           {"wd2", meta.wd2},
           {"version", meta.version}};
    atomic_write(metadata_path(design_path), j.dump(2) + "\n");
}

DesignMetadata read_metadata(const fs::path& design_path) {
    fs::path p = metadata_path(design_path);
    std::ifstream in(p);
    if (!in) throw IoError("cannot open " + p.string());
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw IoError(p.string() + ": " + e.what());
    }
    DesignMetadata meta;
    try {
        meta.n_sim = j.at("n_sim").get<int>();
        meta.n_var = j.at("n_var").get<int>();
        meta.criterion = j.at("criterion").get<std::string>();
        meta.metric = j.at("metric").get<std::string>();
        meta.placement = j.value("placement", std::string("median"));
        meta.alpha = j.at("alpha").get<double>();
        meta.t_init = j.at("t_init").get<double>();
        meta.t_min = j.at("t_min").get<double>();
        meta.moves_per_temp = j.at("moves_per_temp").get<int>();
        meta.stall_limit = j.at("stall_limit").get<int>();
        meta.seed = j.at("seed").get<std::uint64_t>();
        meta.objective = j.at("objective").get<double>();
        meta.wd2 = j.at("wd2").get<double>();
        meta.version = j.value("version", std::string(kToolVersion));
    } catch (const json::exception& e) {
        throw IoError(p.string() + ": " + e.what());
    }
    return meta;
}

}  // namespace umaxpro
