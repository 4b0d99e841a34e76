#include "abshift/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return abshift::cli::run(argc, argv, std::cout, std::cerr); }
