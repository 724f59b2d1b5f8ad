#include "ratdec/cli.hpp"

int main(int argc, char** argv) { return ratdec::cli::run(argc, argv); }
