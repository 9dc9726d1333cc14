#include <iostream>
#include <string>
#include <vector>

#include "rainbow/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rainbow::cli::dispatch(args, std::cout, std::cerr);
}
