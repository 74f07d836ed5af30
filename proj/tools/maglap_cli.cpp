#include "maglap/cli.hpp"

int main(int argc, char** argv) { return maglap::run_cli(argc, argv); }
