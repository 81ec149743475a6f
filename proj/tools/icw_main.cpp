#include <iostream>
#include <string>
#include <vector>

#include "icw/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return icw::cli::run(args, std::cout, std::cerr);
}
