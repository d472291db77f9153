#include <iostream>
#include <string>
#include <vector>

#include "msr/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return msr::run(args, std::cout, std::cerr);
}
