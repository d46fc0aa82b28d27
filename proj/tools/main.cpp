#include "hyperdrift/cli.hpp"

int main(int argc, char** argv) { return hyperdrift::run_cli(argc, argv); }
