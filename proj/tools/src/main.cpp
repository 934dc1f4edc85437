#include <iostream>

#include "latgreen_cli/cli.hpp"

int main(int argc, char** argv) { return latgreen::cli::run(argc, argv, std::cout, std::cerr); }
