#include <cstdlib>
#include <iostream>
#include <string>

#include "ncalg/ncalg.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = ncalg::acceptance::default_seed;
  if (argc > 1) seed = std::stoull(argv[1]);
  auto results = ncalg::acceptance::run_all(seed);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << ncalg::acceptance::format_line(r) << "\n";
    if (!r.pass) ++failed;
  }
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria pass\n";
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
