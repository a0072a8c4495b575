#include <iostream>

#include "mixed_milnor/cli.hpp"

int main(int argc, char** argv) {
  return mixed_milnor::run_cli(argc, argv, std::cout, std::cerr);
}
