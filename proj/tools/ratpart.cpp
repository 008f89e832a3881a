#include <iostream>
#include <string>
#include <vector>

#include "ratpart/cli.hpp"

int main(int argc, char** argv) {
    return ratpart::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
