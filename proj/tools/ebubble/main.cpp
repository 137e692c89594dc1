#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  ebubble::cli::Environment env;
  if (const char* path = std::getenv("EBUBBLE_CONFIG")) env.config_path = path;
  return ebubble::cli::run(args, std::cout, std::cerr, env);
}
