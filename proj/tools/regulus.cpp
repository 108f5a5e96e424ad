#include "regulus/cli.hpp"

int main(int argc, char** argv) {
  return regulus::cli::main(argc, argv);
}
