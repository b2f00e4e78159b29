#include <iostream>

#include "z5/cli.hpp"

int main(int argc, char** argv) { return z5::run(argc, argv, std::cout, std::cerr); }
