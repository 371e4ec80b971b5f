#include "fiberising/cli.hpp"

int main(int argc, char** argv) { return fiberising::cli::run(argc, argv); }
