#include <iostream>

#include "srcot/cli.hpp"

int main(int argc, char** argv) {
    return srcot::run_cli(argc, argv, std::cout, std::cerr);
}
