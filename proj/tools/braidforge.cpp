#include <iostream>
#include <string>
#include <vector>

#include "braidforge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  braidforge::cli::CommandResult result = braidforge::cli::run(args);
  std::cout << result.payload;
  return result.exit_code;
}
