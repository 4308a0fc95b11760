#include <iostream>

#include "nrt/cli.hpp"

int main(int argc, char** argv) { return nrt::run_cli(argc, argv, std::cout, std::cerr); }
