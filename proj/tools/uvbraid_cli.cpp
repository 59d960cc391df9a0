#include <iostream>

#include "uvbraid/cli.hpp"

int main(int argc, char** argv) { return uvb::cli::run(argc, argv, std::cout, std::cerr); }
