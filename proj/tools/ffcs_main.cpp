#include <iostream>

#include "ffcs/cli.hpp"

int main(int argc, char** argv) {
  return ffcs::parse_and_dispatch(argc, argv, std::cout, std::cerr);
}
