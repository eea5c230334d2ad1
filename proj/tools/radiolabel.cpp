#include <iostream>
#include <string>
#include <vector>

#include "radiolabel/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return radiolabel::cli::run(args, std::cin, std::cout, std::cerr);
}
