#include "edgemta/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return edgemta::cli::run(argc, argv, std::cout, std::cerr);
}
