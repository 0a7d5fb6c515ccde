#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return moore57::cli::run(argc, argv, std::cout, std::cerr); }
