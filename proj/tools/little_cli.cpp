#include <iostream>

#include "little/cli.hpp"

int main(int argc, char** argv) {
    return little::run_cli(argc, argv, std::cout, std::cerr);
}
