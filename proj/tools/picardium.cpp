#include <vector>

#include "picardium/cli.hpp"
#include "picardium/pool.hpp"

int main(int argc, char** argv) {
  picardium::install_gmp_pool();
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return picardium::run_command(args);
}
