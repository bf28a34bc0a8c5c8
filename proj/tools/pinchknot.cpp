#include <iostream>

#include "pinchknot/cli.hpp"

int main(int argc, char** argv) { return pinchknot::cli::run(argc, argv, std::cout, std::cerr); }
