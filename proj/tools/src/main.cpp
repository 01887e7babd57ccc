#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return causalql::cli::run(argc, argv, std::cout, std::cerr); }
