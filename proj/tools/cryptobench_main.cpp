#include <iostream>
#include <string>
#include <vector>

#include "cryptobench/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cryptobench::cli::run(args, std::cin, std::cout, std::cerr);
}
