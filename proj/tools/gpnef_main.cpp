#include <iostream>

#include "gpnef/cli.hpp"

int main(int argc, char** argv) {
  return gpnef::cli_main(argc, argv, std::cout, std::cerr);
}
