#include <iostream>

#include "fdalg/cli.hpp"

int main(int argc, char** argv) { return fdalg::cli::run(argc, argv, std::cout, std::cerr); }
