#include <iostream>

#include "vartin/cli.hpp"

int main(int argc, char** argv) {
  return vartin::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
