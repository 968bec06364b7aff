#include "bsv/cli.hpp"

int main(int argc, char** argv) { return bsv::run_command(argc, argv); }
