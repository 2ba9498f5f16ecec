#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace segreta::cli {

enum ExitCode : int {
    kOk = 0,
    kInternalError = 1,
    kValidationError = 2,
    kRetryExhausted = 3,
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes) noexcept;

/// Runs one subcommand (args excludes the program name) and writes the
/// result to `out`, diagnostics to `err`.  Returns an ExitCode.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The envelope without its timing field, for comparing runs.
nlohmann::json strip_timing(nlohmann::json envelope);

}  // namespace segreta::cli
