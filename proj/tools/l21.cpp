#include "l21/cli.hpp"

int main(int argc, char** argv) { return l21::cli::main(argc, argv); }
