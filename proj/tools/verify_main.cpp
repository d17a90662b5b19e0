#include <vector>

#include "symcone/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return symcone::verify::cli_main(std::move(args));
}
