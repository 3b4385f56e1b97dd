#include "xifeq/cli.hpp"

int main(int argc, char** argv) { return xifeq::run_cli(argc, argv); }
