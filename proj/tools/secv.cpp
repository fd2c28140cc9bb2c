#include <iostream>
#include <string>
#include <vector>

#include "secv/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return secv::run_cli(args, std::cout, std::cerr);
}
