#include "sepvar/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    sepvar::CommandResult r = sepvar::run_command(args);
    std::cout << r.output;
    return r.exit_code;
}
