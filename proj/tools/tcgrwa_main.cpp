// tcgrwa_main.cpp - CLI entry point

#include "tcgrwa/cli.hpp"

int main(int argc, char** argv) { return tcgrwa::cli::run_cli(argc, argv); }
