#include "commands.hpp"

int main(int argc, char** argv) { return moshop::cli::run(argc, argv); }
