#include <smellscan/cli/cli.hpp>

#include <iostream>

int main(int argc, char** argv)
{
    return smellscan::cli::run(argc, argv, std::cout, std::cerr);
}
