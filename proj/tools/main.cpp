#include <iostream>

#include "fairhouse/cli.hpp"

int main(int argc, char** argv) { return fairhouse::cli::run(argc, argv, std::cout, std::cerr); }
