#include <iostream>

#include "addcomp/cli.hpp"

int main(int argc, char** argv) {
  return addcomp::run_cli(argc, argv, std::cout, std::cerr);
}
