#include <iostream>

#include "cli_commands.hpp"

int main(int argc, char** argv) { return tstar::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
