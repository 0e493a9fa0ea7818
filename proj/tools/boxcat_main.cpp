#include "boxcat/cli.hpp"

int main(int argc, char** argv) { return boxcat::cli::run(argc, argv); }
