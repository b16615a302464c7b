#include <iostream>

#include "hm/cli/app.hpp"

int main(int argc, char** argv) { return hm::cli::run_cli(argc, argv, std::cout, std::cerr); }
