#include <iostream>
#include <string>
#include <vector>

#include "rdq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rdq::cli::run(args, std::cin, std::cout, std::cerr);
}
