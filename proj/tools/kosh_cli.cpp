#include "kosh_cli.hpp"

int main(int argc, char** argv) { return kosh::cli::run(argc, argv); }
