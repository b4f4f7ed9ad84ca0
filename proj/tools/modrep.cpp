#include "modrep/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return modrep::runCommand(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
