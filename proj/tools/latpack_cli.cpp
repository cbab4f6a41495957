#include "latpack/cli.hpp"

int main(int argc, char** argv) { return latpack::cli::run(argc, argv); }
