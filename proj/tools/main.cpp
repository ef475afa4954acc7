#include <iostream>

#include "kparadigm/cli.hpp"

int main(int argc, char** argv) { return kparadigm::cli::run(argc, argv, std::cout, std::cerr); }
