#pragma once

#include <algorithm>
#include <random>
#include <tuple>
#include <vector>

#include "sigmabrauer/brauer.hpp"

namespace testing_support {

// Random combination of up to three basis diagrams with small rational
// coefficients; zero only when the Hom space is.
inline sb::brauer::Morphism random_morphism(const sb::PartitionTuple& sigma, int n, int m, std::mt19937_64& rng) {
  const auto basis = sb::brauer::hom_basis(sigma, n, m);
  sb::brauer::Morphism f(sigma, n, m);
  if (basis.empty()) return f;
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> terms(1, 3);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  while (f.is_zero()) {
    const int t = terms(rng);
    for (int i = 0; i < t; ++i) {
      sb::Rational c(sb::Integer(num(rng)), sb::Integer(den(rng)));
      c.canonicalize();
      f.add(basis[pick(rng)], c);
    }
  }
  return f;
}

inline bool hom_nonempty(const sb::PartitionTuple& sigma, int n, int m) {
  return !sb::brauer::hom_basis(sigma, n, m).empty();
}

// Random weakly decreasing chain of object sizes in [0, max] whose
// consecutive Hom spaces are all nonzero.
inline std::vector<int> random_chain(const sb::PartitionTuple& sigma, int length, int max, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size(0, max);
  for (;;) {
    std::vector<int> c(static_cast<std::size_t>(length));
    for (auto& x : c) x = size(rng);
    std::sort(c.rbegin(), c.rend());
    bool ok = true;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) ok = ok && hom_nonempty(sigma, c[i], c[i + 1]);
    if (ok) return c;
  }
}

inline std::vector<sb::PartitionTuple> sigma_family() {
  return {sb::PartitionTuple::parse("2"), sb::PartitionTuple::parse("1,1"), sb::PartitionTuple::parse("1"),
          sb::PartitionTuple::parse("1|1"), sb::PartitionTuple::parse("3"), sb::PartitionTuple::parse("2|1")};
}

}  // namespace testing_support
