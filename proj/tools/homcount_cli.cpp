#include <iostream>

#include "homcount/cli.hpp"

int main(int argc, char** argv) { return homcount::cli_dispatch(argc, argv, std::cout, std::cerr); }
