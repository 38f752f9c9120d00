#include <iostream>

#include "graphcrit/commands.hpp"

int main(int argc, char** argv) { return graphcrit::run_cli(argc, argv, std::cout, std::cerr); }
