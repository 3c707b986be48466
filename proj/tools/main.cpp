#include <iostream>

#include "eigmult/cli.hpp"

int main(int argc, char** argv) { return eigmult::run_cli(argc, argv, std::cout, std::cerr); }
