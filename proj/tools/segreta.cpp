#include <iostream>

#include "segreta/cli/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return segreta::cli::run_command(args, std::cout, std::cerr);
}
