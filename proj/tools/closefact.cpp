#include "closefact/cli.hpp"

int main(int argc, char** argv) { return closefact::cli::main(argc, argv); }
