#include "dilation/cli.hpp"

int main(int argc, char** argv) { return dilation::run(argc, argv); }
