#include <iostream>

#include "hsi/cli.hpp"

int main(int argc, char** argv) { return hsi::run(argc, argv, std::cout, std::cerr); }
