#include <iostream>

#include "isetlab/cli.hpp"

int main(int argc, char** argv) { return isetlab::cli::run(argc, argv, std::cout, std::cerr); }
