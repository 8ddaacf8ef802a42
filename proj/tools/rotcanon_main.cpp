#include <iostream>
#include <string>
#include <vector>

#include "rotcanon/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rotcanon::cli::dispatch(std::move(args), std::cout, std::cerr);
}
