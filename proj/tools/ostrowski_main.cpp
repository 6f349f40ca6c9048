#include <iostream>

#include "ostrowski/cli.hpp"

int main(int argc, char** argv) { return ostrowski::cli::dispatch(argc, argv, std::cout, std::cerr); }
