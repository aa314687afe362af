#include <iostream>

#include "quivermut/service.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return quivermut::service::run_cli(args, std::cout, std::cerr);
}
