#include <iostream>

#include "qbilat/cli.hpp"

int main(int argc, char** argv) {
  return qbilat::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
