#include <iostream>

#include "coartin/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return coartin::run(args, std::cout, std::cerr);
}
