#include <iostream>

#include "kmatch/cli.hpp"

int main(int argc, char** argv) { return kmatch::cli::run(argc, argv, std::cout, std::cerr); }
