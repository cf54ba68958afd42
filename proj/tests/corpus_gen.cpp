// Regenerates the golden corpus: corpus_gen <output-dir>

#include <iostream>

#include "corpus_build.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: corpus_gen <output-dir>\n";
    return 1;
  }
  boxcover::corpus::build(argv[1]);
  return 0;
}
