#include "cli.hpp"

int main(int argc, char** argv) { return ordcover::cli::run(argc, argv); }
