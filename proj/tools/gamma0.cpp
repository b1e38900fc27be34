#include <iostream>

#include "gamma0/cli.hpp"

int main(int argc, char** argv) { return gamma0::cli::run(argc, argv, std::cout, std::cerr); }
