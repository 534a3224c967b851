#include <iostream>
#include <string>
#include <vector>

#include "ramseg/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ramseg::run_cli(args, std::cout, std::cerr);
}
