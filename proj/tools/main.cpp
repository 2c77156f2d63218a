#include <iostream>

#include "cli.hpp"

int main(int argc, char **argv) {
    return walklab::cli::run_command(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
