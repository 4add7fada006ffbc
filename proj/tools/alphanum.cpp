#include <iostream>
#include <string>
#include <vector>

#include "alphanum/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const alphanum::CommandResult r = alphanum::run_command(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
