#include <iostream>

#include "coshbar/cli/app.hpp"

int main(int argc, char** argv)
{
    return coshbar::cli::run(argc, argv, std::cout, std::cerr);
}
