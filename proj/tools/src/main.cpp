#include <iostream>

#include "paramedial_cli/cli.hpp"

int main(int argc, char** argv) {
  return paramedial::cli::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
