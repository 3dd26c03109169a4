#include "slender/cli.hpp"

int main(int argc, char** argv) { return slender::cli::run(argc, argv); }
