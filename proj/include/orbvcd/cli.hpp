#ifndef ORBVCD_CLI_HPP
#define ORBVCD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace orbvcd::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_usage = 2,
    exit_cache_corrupt = 3,
};

/// Environment variable consulted for the cache directory when --cache-dir
/// is absent.
inline constexpr const char* cache_dir_env = "ORBVCD_CACHE_DIR";

/// Runs one command line (without the program name). Records go to `out`;
/// diagnostics and the timing summary go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace orbvcd::cli

#endif
