#include "overcert/cli.hpp"

int main(int argc, char** argv) { return overcert::cli::run(argc, argv); }
