#include <iostream>

#include "veerkit/cli.hpp"

int main(int argc, char** argv) { return veerkit::cli::run(argc, argv, std::cout); }
