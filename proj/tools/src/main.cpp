#include "run.hpp"

#include <iostream>

int main(int argc, char **argv) {
  return oz::cli::main_entry(argc, argv, std::cout, std::cerr);
}
