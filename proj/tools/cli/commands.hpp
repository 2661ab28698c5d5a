#pragma once

#include "cli/config.hpp"
#include "cli/table.hpp"

namespace escrate::cli {

/// Subcommand names in help order.
const std::vector<std::string>& command_names();

/// Executes one subcommand. Library errors propagate to the caller.
Table run_command(const RunConfig& cfg);

} // namespace escrate::cli
