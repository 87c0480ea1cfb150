#include <iostream>

#include "qvp/cli.hpp"

int main(int argc, char** argv) { return qvp::run_cli(argc, argv, std::cout, std::cerr); }
