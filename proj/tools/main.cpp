#include "tfg/cli.hpp"

int main(int argc, char** argv) { return tfg::main_entry(argc, argv); }
