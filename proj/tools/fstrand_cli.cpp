#include "commands.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return fstrand::cli::run({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
