// Scan depths for the first truncation of 1 + 1! + 2! + ... that has no
// integer representative within the bound.

#include "cuntz/cuntz.hpp"

#include <cstdlib>
#include <iostream>

using namespace cuntz;

int main(int argc, char** argv) {
  const std::int64_t bound = argc > 1 ? std::atoll(argv[1]) : 1000000;
  for (std::size_t d = 1; d <= 12; ++d) {
    const ProfiniteInt x = all_ones(d);
    const auto w = nonintegrality_witness(x, bound);
    std::cout << "depth " << d << ": residue " << x.value() << " mod " << x.modulus() << (w ? "  witness" : "")
              << "\n";
    if (w)
      return 0;
  }
  return 1;
}
