#include <iostream>

#include "ainf_cli/cli.hpp"

int main(int argc, char** argv) { return ainf::cli::run(argc, argv, std::cout, std::cerr); }
