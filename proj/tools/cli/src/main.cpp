#include <iostream>

#include "vngeom/cli/dispatch.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vngeom::cli::dispatch(args, std::cout, std::cerr);
}
