#include <iostream>

#include "hecat/cli/cli.hpp"

// acceptance [fast|full] [--seed N] [--format json]
int main(int argc, char** argv) {
    std::vector<std::string> args{"accept"};
    args.insert(args.end(), argv + 1, argv + argc);
    if (argc < 2) args.push_back("fast");
    return hecat::run_cli(args, std::cout, std::cerr);
}
