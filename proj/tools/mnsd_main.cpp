#include <iostream>

#include "mnsd/cli.hpp"

int main(int argc, char** argv) { return mnsd::io::run_cli(argc, argv, std::cout, std::cerr); }
