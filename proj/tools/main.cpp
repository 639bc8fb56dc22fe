#include "cli.hpp"

int main(int argc, char** argv) { return germain::cli::run(argc, argv); }
