#include <iostream>

#include "toeplitz/cli.hpp"

int main(int argc, char** argv) { return toeplitz::run(argc, argv, std::cout, std::cerr); }
