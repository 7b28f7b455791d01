#include <iostream>

#include "rtoric/cli.hpp"

int main(int argc, char **argv)
{
  return rtoric::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
