#include "fmethod/cli.hpp"

int main(int argc, char** argv) { return fmethod::run_cli(argc, argv); }
