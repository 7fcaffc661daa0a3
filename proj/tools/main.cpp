#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return brickwang::cli::run(argc, argv, std::cout, std::cerr); }
