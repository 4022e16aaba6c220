#include "entwine/cli.hpp"

int main(int argc, char **argv) { return entwine::run_cli(argc, argv); }
