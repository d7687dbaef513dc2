#include <iostream>
#include <string>
#include <vector>

#include "qfano/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return qfano::cli::run(args, std::cout, std::cerr);
}
