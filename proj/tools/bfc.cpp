#include <iostream>

#include "bfc/cli.hpp"

int main(int argc, char** argv) {
  return bfc::cli::run(argc, argv, std::cout, std::cerr);
}
