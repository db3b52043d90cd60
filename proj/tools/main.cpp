#include "v2xsec/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return v2xsec::execute({argv + 1, argv + argc}, std::cout, std::cerr);
}
