#include "pg/cli.hpp"

int main(int argc, char** argv) { return pg::cli::cli_main(argc, argv); }
