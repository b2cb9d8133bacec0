#include <iostream>

#include "mchords/cli.hpp"

int main(int argc, char** argv) { return mchords::run(argc, argv, std::cout, std::cerr); }
