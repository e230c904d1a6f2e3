#include <iostream>

#include "glasser/cli.hpp"

int main(int argc, char** argv) {
  return glasser::cli::main_entry(argc, argv, std::cout, std::cerr);
}
