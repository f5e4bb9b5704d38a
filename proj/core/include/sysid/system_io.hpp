#pragma once

#include "sysid/state_space.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace sysid {

/// JSON object {A, B, C, D, Bw, Dz, x1}; matrices are row-major nested arrays,
/// x1 is a flat array. Bw, Dz and x1 are optional on input.
StateSpace system_from_json(std::string_view text);
std::string system_to_json(const StateSpace& sys, int indent = 2);

StateSpace load_system(const std::filesystem::path& path);
void save_system(const StateSpace& sys, const std::filesystem::path& path);

/// Nested-array matrix parsing shared with the config reader. Throws ParseError.
Matrix matrix_from_json_text(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace sysid
