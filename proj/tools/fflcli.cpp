#include "ffl/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return ffl::cli_run(argc, argv, std::cout, std::cerr); }
