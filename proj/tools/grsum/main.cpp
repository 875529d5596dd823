#include <iostream>

#include "grsum/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return grsum::cli::run(args, std::cout, std::cerr);
}
