#include <iostream>

#include "cli/app.hpp"

int main(int argc, char** argv) {
  return thz::cli::run_main(argc, argv, std::cout, std::cerr);
}
