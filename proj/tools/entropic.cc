#include <iostream>

#include "entropic/cli/app.h"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return entropic::cli::run_cli(args, std::cout, std::cerr);
}
