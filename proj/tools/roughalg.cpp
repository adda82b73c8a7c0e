#include <iostream>

#include "roughalg/cli.hpp"

int main(int argc, char** argv) {
  return roughalg::cli::run(argc, argv, std::cout, std::cerr);
}
