#include <iostream>

#include "compass/cli.hpp"

int main(int argc, char** argv) {
  return compass::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
