#include <iostream>

#include "oreprime/cli.hpp"

int main(int argc, char** argv) { return oreprime::runCli(argc, argv, std::cout, std::cerr); }
