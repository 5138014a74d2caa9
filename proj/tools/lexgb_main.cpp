#include <iostream>
#include <string>
#include <vector>

#include "lexgb/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return lexgb::cli::run(args, std::cin, std::cout, std::cerr);
}
