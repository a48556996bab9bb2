#include "hilbforest/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    const auto outcome = hilbforest::cli::run(std::vector<std::string>(argv + 1, argv + argc));
    std::cout << outcome.out;
    std::cerr << outcome.err;
    return outcome.status;
}
