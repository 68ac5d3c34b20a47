#include <iostream>

#include "bkclab/cli/app.hpp"

int main(int argc, char** argv) { return bkclab::cli::run_cli(argc, argv, std::cout, std::cerr); }
