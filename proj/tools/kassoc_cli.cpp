#include <iostream>
#include <string>
#include <vector>

#include "kassoc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return kassoc::dispatch(args, std::cout, std::cerr);
}
