#include <iostream>

#include "fi1/cli.hpp"

int main(int argc, char** argv) {
  return fi1::cli::run({argv, argv + argc}, std::cout, std::cerr);
}
