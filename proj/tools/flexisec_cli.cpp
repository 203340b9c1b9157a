#include "flexisec/bench.hpp"

int main(int argc, char** argv) { return flexisec::run_cli(argc, argv); }
