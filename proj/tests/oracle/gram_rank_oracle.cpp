// Prints exact span dimensions of the h_p family (n = 2..10) and of the
// conjugation orbit of Q_0 (n = 2..5). The h column is frozen into
// frozen_ranks.hpp.

#include <cstdio>
#include <cstdlib>

#include "cyclotomic.hpp"
#include "exact_generators.hpp"

int main(int argc, char** argv) {
  const int h_max = argc > 1 ? std::atoi(argv[1]) : 10;
  const int orbit_max = argc > 2 ? std::atoi(argv[2]) : 5;
  std::printf("n  dim_h_span  dim_orbit\n");
  for (int n = 2; n <= h_max; ++n) {
    const auto h = oracle::gram_rank(oracle::scaled_h(n));
    if (n <= orbit_max) {
      std::printf("%-2d %-11zu %zu\n", n, h, oracle::gram_rank(oracle::scaled_orbit(n, 0)));
    } else {
      std::printf("%-2d %-11zu -\n", n, h);
    }
    std::fflush(stdout);
  }
}
