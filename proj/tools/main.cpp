#include <iostream>

#include "zeta_forge/cli.hpp"

int main(int argc, char** argv) { return zeta_forge::cli::main_entry(argc, argv, std::cout, std::cerr); }
