#include <iostream>

#include "splab/cli.hpp"

int main(int argc, char** argv) { return splab::run_cli(argc, argv, std::cout, std::cerr); }
