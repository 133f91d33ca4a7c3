#include <iostream>

#include "hgm/cli.hpp"

int main(int argc, char** argv) { return hgm::cli::run(argc, argv, std::cout, std::cerr); }
