#include <iostream>

#include "parabolica/selftest.hpp"

int main() {
  parabolica::selftest::Options opt;
  opt.golden_dir = PARABOLICA_GOLDEN_DIR;
  int failed = 0;
  parabolica::selftest::run(opt, [&](const parabolica::selftest::Outcome& o) {
    std::cout << parabolica::selftest::format(o) << std::endl;
    if (!o.passed) ++failed;
  });
  std::cout << (failed == 0 ? "all 9 criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
