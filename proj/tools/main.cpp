#include "tiltsvm/cli.hpp"

int main(int argc, char** argv) { return tiltsvm::run_cli(argc, argv); }
