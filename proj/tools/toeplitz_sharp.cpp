#include <iostream>

#include "tsharp/cli.hpp"

int main(int argc, char** argv) { return tsharp::cli::run(argc, argv, std::cout, std::cerr); }
