#include "dcq/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return dcq::cli::main_entry(argc, argv, std::cout, std::cerr); }
