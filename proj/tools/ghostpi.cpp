#include <ghostpi/cli.hpp>

int main(int argc, char** argv) { return ghostpi::cli::run(argc, argv); }
