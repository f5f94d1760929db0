#include <string>
#include <vector>

#include "mapperforge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mapperforge::run_cli(args);
}
