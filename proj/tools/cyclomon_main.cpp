#include "cyclomon/cli.hpp"

int main(int argc, char** argv) { return cyclomon::cli::main_entry(argc, argv); }
