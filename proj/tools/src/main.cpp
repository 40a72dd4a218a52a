#include "augraph_cli/cli.hpp"

int main(int argc, char** argv) { return augraph::cli::run(argc, argv); }
