#include <iostream>

#include "alba/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return alba::cli::run(args, std::cout, std::cerr, std::cin);
}
