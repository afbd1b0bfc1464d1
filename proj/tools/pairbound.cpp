#include "pairbound/cli.hpp"

int main(int argc, char** argv) { return pairbound::cli::run(argc, argv); }
