#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "sojourn/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return sojourn::run(args, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "sojourn: " << e.what() << '\n';
    return 3;
  }
}
