#include <iostream>

#include "zetaband/cli.hpp"

int main(int argc, char** argv) { return zetaband::cli::main_entry(argc, argv, std::cout, std::cerr); }
