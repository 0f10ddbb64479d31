#include "tir/cli/scenarios.hpp"

int main(int argc, char** argv) { return tir::cli::main_entry(argc, argv); }
