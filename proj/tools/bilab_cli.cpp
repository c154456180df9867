#include "bilab/cli.hpp"

int main(int argc, char** argv) { return bilab::cli::main(argc, argv); }
