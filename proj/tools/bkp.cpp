#include <iostream>

#include "bkp/cli.hpp"

int main(int argc, char** argv) {
  return bkp::run_cli(argc, argv, std::cout, std::cerr);
}
