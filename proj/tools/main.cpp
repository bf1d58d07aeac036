#include "secant_hodge/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return secant_hodge::cli::run_cli(argc, argv, std::cout, std::cerr); }
