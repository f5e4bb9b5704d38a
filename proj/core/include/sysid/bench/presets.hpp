#pragma once

#include "sysid/state_space.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace sysid::bench {

/// "double-integrator", "scalar-marginal" or "stable-random".
StateSpace preset(std::string_view name);
bool is_preset(std::string_view name);
std::vector<std::string> preset_names();

}  // namespace sysid::bench
