#pragma once

#include <CLI11.hpp>

namespace rflight::cli {

/// Registers every subcommand on `app`. The selected command writes its exit
/// status to `status` when it runs.
void add_commands(CLI::App& app, int& status);

}  // namespace rflight::cli
