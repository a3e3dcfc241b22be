#include "lpc/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return lpc::cli_main(argc, argv, std::cout, std::cerr); }
