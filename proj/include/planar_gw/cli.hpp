#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace planar_gw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;

/// Name of the environment variable holding the default cache path.
inline constexpr const char* kCacheEnv = "PLANAR_GW_CACHE";

/// Entry point of `planar-gw`. `args` excludes the program name. Results go
/// to `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::map<std::string, std::string>& env = {});

}  // namespace planar_gw::cli
