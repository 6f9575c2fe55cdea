#include <iostream>

#include "jv/cli.hpp"

int main(int argc, char** argv) { return jv::run_cli(argc, argv, std::cout, std::cerr); }
