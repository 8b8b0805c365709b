#include <iostream>
#include <string>
#include <vector>

#include "qetude/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qetude::cli::run(args, std::cout, std::cerr);
}
