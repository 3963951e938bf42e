#include "sfp/cli.hpp"

int main(int argc, char** argv) { return sfp::cli_main(argc, argv); }
