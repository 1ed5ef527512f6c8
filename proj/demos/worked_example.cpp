// Print the generator images of f(1,2), f(2,4), f(1,4) and check that the
// first two compose to the third.

#include "cuntz/cuntz.hpp"

#include <iostream>

using namespace cuntz;

namespace {

void show(const char* name, const GenHom& h) {
  std::cout << name << ":\n";
  for (Letter k = 1; k <= h.checked_generators(); ++k)
    std::cout << "  s" << k << " -> " << to_string(h.image(k)) << "\n";
}

} // namespace

int main() {
  show("f(1,2)", f(1, 2));
  show("f(2,4)", f(2, 4));
  show("f(1,4)", f(1, 4));
  const auto mismatch = find_image_mismatch(compose(f(1, 2), f(2, 4)), f(1, 4));
  std::cout << "f(1,2) o f(2,4) == f(1,4): " << (mismatch ? "no" : "yes") << "\n";

  const Element x = parse(AlgebraTag::r(4), "s5 s3' + 2 s1");
  std::cout << "f(1,4)(" << to_string(x) << ") = " << to_string(apply(f(1, 4), x)) << "\n";
  return mismatch ? 1 : 0;
}
