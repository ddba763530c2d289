#include <iostream>

#include "eur/cli.hpp"

int main(int argc, char** argv) { return eur::cli::run(argc, argv, std::cout, std::cerr); }
