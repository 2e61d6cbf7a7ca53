#include <iostream>

#include "milnor_hodge/cli.hpp"

int main(int argc, char** argv) { return milnor_hodge::cli::main_entry(argc, argv, std::cout, std::cerr); }
