#include "opint/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return opint::run_cli(argc, argv, std::cout, std::cerr); }
