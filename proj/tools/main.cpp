#include "reslat/cli.hpp"

int main(int argc, char** argv) { return reslat::cli::run(argc, argv); }
