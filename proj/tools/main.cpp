#include "minrank/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return minrank::cli::run(argc, argv, std::cout, std::cerr); }
