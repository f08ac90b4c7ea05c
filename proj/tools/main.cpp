#include <iostream>

#include "robustcurve/cli.hpp"

int main(int argc, char** argv) {
    return robustcurve::cli::run(argc, argv, std::cout, std::cerr);
}
