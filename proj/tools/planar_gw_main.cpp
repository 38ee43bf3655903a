#include "planar_gw/cli.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  std::map<std::string, std::string> env;
  if (const char* cache = std::getenv(planar_gw::cli::kCacheEnv)) env[planar_gw::cli::kCacheEnv] = cache;
  return planar_gw::cli::run({argv + 1, argv + argc}, std::cout, std::cerr, env);
}
