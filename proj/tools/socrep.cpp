#include "socrep/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return socrep::cli_main(argc, argv, std::cout, std::cerr); }
