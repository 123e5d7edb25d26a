#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return rc3bp::cli::dispatch(argc, argv, std::cout, std::cerr); }
