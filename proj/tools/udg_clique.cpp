#include "udg/cli.hpp"

int main(int argc, char** argv) { return udg::cli_main(argc, argv); }
