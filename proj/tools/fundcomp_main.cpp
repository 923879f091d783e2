#include <iostream>
#include <string>
#include <vector>

#include "fundcomp/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fundcomp::cli::run(std::move(args), std::cout, std::cerr);
}
