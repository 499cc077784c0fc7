#include <iostream>
#include <string>
#include <vector>

#include "s2re/cli.hpp"

int main(int argc, char** argv)
{
    return s2re::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
