#include <iostream>

#include "vdcat/cli.hpp"

int main(int argc, char** argv) { return vdcat::run_main(argc, argv, std::cout, std::cerr); }
