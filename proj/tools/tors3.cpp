#include "tors3/cli.hpp"

int main(int argc, char** argv) { return tors3::cli::run(argc, argv); }
