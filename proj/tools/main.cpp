#include "credal/cli.hpp"

int main(int argc, char** argv) {
  return credal::cli::main_entry(argc, argv);
}
