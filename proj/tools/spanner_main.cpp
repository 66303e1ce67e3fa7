#include <iostream>

#include "rtspan/cli.hpp"

int main(int argc, char** argv) { return rtspan::run_cli(argc, argv, std::cout, std::cerr); }
