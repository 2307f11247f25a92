#include <iostream>

#include "cubewalk/cli.hpp"

int main(int argc, char** argv) { return cubewalk::cli::main(argc, argv, std::cout, std::cerr); }
