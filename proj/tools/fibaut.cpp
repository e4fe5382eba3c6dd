#include "fibaut/cli.hpp"

int main(int argc, char** argv) { return fibaut::cli::main(argc, argv); }
