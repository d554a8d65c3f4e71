#include <iostream>

#include "cyclofact/cli.hpp"

int main(int argc, char** argv) { return cyclofact::cli::run(argc, argv, std::cout, std::cerr); }
