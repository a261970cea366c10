#include "abckit/cli.hpp"

int main(int argc, char** argv) { return abckit::cli_main(argc, argv); }
