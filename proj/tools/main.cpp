#include "ghgeo/cli.hpp"

int main(int argc, char** argv) { return ghgeo::cli::run(argc, argv); }
