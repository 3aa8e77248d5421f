#include <iostream>

#include "venn/cli.hpp"

int main(int argc, char** argv) { return venn::run_cli(argc, argv, std::cout, std::cerr); }
