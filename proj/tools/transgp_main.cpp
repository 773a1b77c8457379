#include "transgp/cli/commands.hpp"

int main(int argc, char** argv) { return transgp::run_cli(argc, argv); }
