#include "k3bn/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return k3bn::run_cli(argc, argv, std::cout, std::cerr); }
