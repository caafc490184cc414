#include <iostream>
#include <string>
#include <vector>

#include "orthocover/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return orthocover::run_cli(args, std::cout, std::cerr);
}
