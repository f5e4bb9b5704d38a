#pragma once

#include "sysid/bench/sweep.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace sysid::bench {

inline constexpr int kSchemaVersion = 1;

/// "%.17g".
std::string format_double(double v);

/// Header comments, column header and rows. The timestamp comment is the
/// second line so that everything after it is reproducible.
std::string results_csv(const std::vector<ResultRow>& rows, bool timestamp = true);
std::string lowerbound_csv(const std::vector<LowerBoundRow>& rows, bool timestamp = true);

/// Writes to a temporary file next to path and renames it into place.
void write_atomic(const std::filesystem::path& path, const std::string& contents);

/// Drops lines starting with '#'.
std::string strip_comments(const std::string& csv);

}  // namespace sysid::bench
