#include <iostream>

#include "kepler/cli.hpp"

int main(int argc, char** argv) { return kepler::cli_main(argc, argv, std::cout, std::cerr); }
