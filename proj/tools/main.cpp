#include <iostream>

#include "bca/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bca::run_cli(std::move(args), std::cout, std::cerr);
}
