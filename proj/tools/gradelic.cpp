#include <iostream>

#include "gradelic/cli.hpp"

int main(int argc, char** argv) {
  return gradelic::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
