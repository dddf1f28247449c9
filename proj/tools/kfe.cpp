#include <iostream>
#include <string>
#include <vector>

#include <kfe/cli.hpp>

int main(int argc, char **argv)
{
    return kfe::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
