#include "cli.hpp"

int main(int argc, char** argv) { return gxmod::cli::run(argc, argv); }
