#include <iostream>

#include "fuzzydepth/commands.hpp"

int main(int argc, char** argv) { return fdepth::cli::run(argc, argv, std::cout, std::cerr); }
