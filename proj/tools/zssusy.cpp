#include <string>
#include <vector>

#include "zssusy/cli.hpp"

int main(int argc, char** argv) {
  return zssusy::cli::run(std::vector<std::string>(argv, argv + argc));
}
