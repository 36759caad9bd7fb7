#include <iostream>

#include "tclass/cli.hpp"

int main(int argc, char** argv) {
    return tclass::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
