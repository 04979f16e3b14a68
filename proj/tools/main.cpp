// main.cpp — Entry point for the rsim binary.
#include "rolesim/cli.hpp"

int main(int argc, char** argv) { return rolesim::cli::run(argc, argv); }
