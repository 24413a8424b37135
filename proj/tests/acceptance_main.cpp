#include <iostream>
#include <string>
#include <vector>

#include "hier/acceptance.hpp"

// Usage: acceptance [A1 A2 ...]
int main(int argc, char** argv) {
  std::vector<std::string> ids(argv + 1, argv + argc);
  bool ok = true;
  hier::acceptance::run(ids, {}, [&](const hier::acceptance::SuiteResult& r) {
    std::cout << hier::acceptance::format(r) << std::endl;
    ok = ok && r.passed;
  });
  return ok ? 0 : 1;
}
