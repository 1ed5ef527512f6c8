// Push an element of Oinf down a divisibility chain and check coherence.

#include "cuntz/cuntz.hpp"

#include <iostream>

using namespace cuntz;

int main(int argc, char** argv) {
  const std::string expr = argc > 1 ? argv[1] : "s1 s3' + 2 s5 s2";
  const Chain chain({1, 2, 4, 12});
  const Element x = parse(AlgebraTag::infinite(), expr);
  const CoherentFamily fam = psi(chain, x);
  for (std::size_t j = 0; j < fam.entries.size(); ++j)
    std::cout << "n=" << chain[j] << ": " << to_string(fam.entries[j]) << "\n";
  const bool ok = check_coherent(fam);
  std::cout << (ok ? "coherent" : "incoherent") << "\n\n" << render_partition(chain, 48);
  return ok ? 0 : 1;
}
