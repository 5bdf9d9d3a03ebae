#include <iostream>

#include "scrolls/cli.hpp"

int main(int argc, char** argv) {
    return scrolls::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
