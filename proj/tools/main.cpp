#include <iostream>

#include "spectable/cli.hpp"

int main(int argc, char** argv) { return spectable::run(argc, argv, std::cout, std::cerr); }
