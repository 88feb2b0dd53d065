#include <iostream>
#include <string>
#include <vector>

#include "gbessel/report.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gbessel::report::run(args, std::cout, std::cerr);
}
