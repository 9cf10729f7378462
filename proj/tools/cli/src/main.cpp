#include <iostream>

#include "tra_cli/commands.hpp"

int main(int argc, char** argv) { return tra::cli::run_cli(argc, argv, std::cout, std::cerr); }
