#include "cli.hpp"

int main(int argc, char** argv) { return gmmrans::cli::run(argc, argv); }
