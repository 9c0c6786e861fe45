#include <iostream>
#include <string>
#include <vector>

#include "howe/cli.hpp"

int main(int argc, char** argv) {
    return howe::cli::main_entry(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
