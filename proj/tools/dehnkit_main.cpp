#include <iostream>
#include <string>
#include <vector>

#include "dehnkit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dehnkit::cli::run(args, std::cout, std::cerr);
}
