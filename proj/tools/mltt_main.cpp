#include <iostream>
#include <string>
#include <vector>

#include "mltt/frontend/driver.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mltt::frontend::run(args, std::cout, std::cerr);
}
