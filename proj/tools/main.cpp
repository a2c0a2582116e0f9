#include "smartgraph/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return smartgraph::run_cli(args, std::cout, std::cerr, isatty(STDOUT_FILENO) != 0);
}
