#include "ybalg/cli.hpp"

int main(int argc, char** argv) { return ybalg::cli::run(argc, argv); }
