#include "phimdp/cli.hpp"

int main(int argc, char** argv) { return phimdp::cli_main(argc, argv); }
