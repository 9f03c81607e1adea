#include <iostream>

#include "whanoi_cli/commands.hpp"

int main(int argc, char** argv) { return whanoi::cli::run(argc, argv, std::cout, std::cerr); }
