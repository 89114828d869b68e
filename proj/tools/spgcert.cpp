#include <iostream>

#include "spg/cli.hpp"

int main(int argc, char** argv) {
  return spg::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
