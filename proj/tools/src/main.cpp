#include <iostream>

#include "bctk/cli/commands.hpp"

int main(int argc, char** argv) {
    return bctk::cli::run_main(argc, argv, std::cout, std::cerr);
}
