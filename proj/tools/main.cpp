#include <iostream>
#include <string>
#include <vector>

#include "skeletal/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return skeletal::run_cli(args, std::cout, std::cerr);
}
