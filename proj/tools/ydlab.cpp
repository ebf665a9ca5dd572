#include <iostream>

#include "ydlab/cli/app.hpp"

int main(int argc, char** argv) { return ydlab::cli::run(argc, argv, std::cout, std::cerr); }
