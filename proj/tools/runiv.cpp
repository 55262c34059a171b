#include "runiv/cli.hpp"

int main(int argc, char** argv) { return runiv::run(argc, argv); }
