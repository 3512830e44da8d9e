#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "umaxpro/annealer.hpp"
#include "umaxpro/criteria.hpp"
#include "umaxpro/design.hpp"

namespace umaxpro {

inline constexpr const char* kToolVersion = "0.1.0";

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reproducibility sidecar stored next to each design file.
struct DesignMetadata {
    int n_sim = 0;
    int n_var = 0;
    std::string criterion;
    std::string metric;
    std::string placement = "median";
    double alpha = 0.95;
    double t_init = 0.0;
    double t_min = 0.0;
    int moves_per_temp = 0;
    int stall_limit = 30;
    std::uint64_t seed = 0;
    double objective = 0.0;
    double wd2 = 0.0;
    std::string version = kToolVersion;
};

/// 17 significant digits: lossless round trip of binary64 coordinates.
std::string format_coord(double x);

/// Headerless comma-separated matrix, one row per point. Atomic
/// (write-then-rename).
void write_design_csv(const std::filesystem::path& path, const Design& design);

/// Parses a design file; throws IoError naming the offending line.
Design read_design_csv(const std::filesystem::path& path);

std::filesystem::path metadata_path(const std::filesystem::path& design_path);
void write_metadata(const std::filesystem::path& design_path, const DesignMetadata& meta);
DesignMetadata read_metadata(const std::filesystem::path& design_path);

}  // namespace umaxpro
