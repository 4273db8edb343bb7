#include <iostream>
#include <string>
#include <vector>

#include "mellinsphere/cli.hpp"

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv, argv + argc);
    return mellinsphere::cli::run(args, std::cout, std::cerr);
}
