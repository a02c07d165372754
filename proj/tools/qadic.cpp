#include <iostream>

#include "qadic/cli.hpp"

int main(int argc, char** argv) { return qadic::cli::main(argc, argv, std::cout, std::cerr); }
