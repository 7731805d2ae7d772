#include <iostream>

#include "impsep/cli.hpp"

int main(int argc, char** argv) {
  return impsep::run_cli({argv, argv + argc}, std::cout, std::cerr);
}
