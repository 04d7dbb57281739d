#include "qflow/cli.hpp"

int main(int argc, char** argv) { return qflow::cli::run(argc, argv); }
