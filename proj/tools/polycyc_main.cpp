#include "polycyc/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return polycyc::cli::run(argc, argv, std::cout, std::cerr); }
