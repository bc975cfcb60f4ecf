#include <iostream>

#include "ntn/cli.hpp"

int main(int argc, char** argv)
{
    return ntn::run_cli(argc, argv, std::cout, std::cerr);
}
