#include "hilbpts/cli.hpp"

int main(int argc, char** argv) { return hilb::cli::run(argc, argv); }
