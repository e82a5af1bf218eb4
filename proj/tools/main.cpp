#include <iostream>

#include "monocurve/cli.hpp"

int main(int argc, char** argv) {
  return monocurve::cli::run(argc, argv, std::cout, std::cerr);
}
