#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return affgrass::cli::main(argc, argv, std::cout, std::cerr); }
