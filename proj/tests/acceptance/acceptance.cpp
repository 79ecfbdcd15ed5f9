// One line per acceptance criterion; exit status is nonzero if any fails.
#include <cstring>
#include <iostream>

#include "lsp/sweep.hpp"

int main(int argc, char** argv) {
  lsp::sweep::Options opts;
  for (int k = 1; k < argc; ++k)
    if (std::strcmp(argv[k], "--parallel") == 0) opts.parallel = true;
  bool all = true;
  for (const auto& criterion : lsp::sweep::criteria()) {
    const auto r = criterion(opts);
    all = all && r.pass;
    std::cout << lsp::sweep::format_line(r) << std::endl;
  }
  std::cout << "observation: " << lsp::sweep::nonnegativity_report() << std::endl;
  std::cout << (all ? "ALL PASS" : "SOME CRITERIA FAILED") << std::endl;
  return all ? 0 : 1;
}
