#include <iostream>

#include "kostka/cli.hpp"

int main(int argc, char** argv) { return kostka::cli::run(argc, argv, std::cout, std::cerr); }
