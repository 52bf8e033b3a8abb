#include <iostream>
#include <vector>

#include "ferrers/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ferrers::cli::run(args, std::cout, std::cerr);
}
