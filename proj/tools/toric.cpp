#include <iostream>

#include "toric/cli.hpp"

int main(int argc, char** argv)
{
    return toric::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
