#include <iostream>

#include "mpma/cli.hpp"

int main(int argc, char** argv) { return mpma::run_cli(argc, argv, std::cout, std::cerr); }
