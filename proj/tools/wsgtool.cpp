#include <iostream>

#include "wsg/cli.hpp"

int main(int argc, char** argv) { return wsg::run_cli(argc, argv, std::cout, std::cerr); }
