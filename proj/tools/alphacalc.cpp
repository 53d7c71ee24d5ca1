#include <iostream>

#include "alphacalc/cli.hpp"

int main(int argc, char** argv) { return alphacalc::run_cli(argc, argv, std::cout, std::cerr); }
