#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "random_morphisms.hpp"
#include "sigmabrauer/errors.hpp"
#include "sigmabrauer/schurweyl.hpp"

using namespace sb;
using namespace sb::schurweyl;
using testing_support::sigma_family;

namespace {

la::RatMat random_matrix(int N, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-2, 2);
  la::RatMat g(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) = dist(rng);
  return g;
}

}  // namespace

TEST_CASE("weight space examples") {
  const auto two = PartitionTuple::parse("2");
  CHECK(weight_space_basis(two, 4, 0).size() == 3);
  CHECK(weight_space_basis(two, 3, 1).size() == 3);
  CHECK(weight_space_basis(PartitionTuple::parse("2|1"), 3, 0).size() == 4);
  for (const auto& sigma : sigma_family())
    for (int n = 0; n <= 5; ++n) {
      const auto basis = weight_space_basis(sigma, n, n);
      CHECK(basis.size() == factorial(n));
      for (const auto& w : basis) CHECK(w.monomial.empty());
    }
  const auto single = weight_space_basis(two, 2, 0);
  REQUIRE(single.size() == 1);
  CHECK(to_diagram(single[0]) == brauer::DiagramKey{{}, {{{1, 2}, 0, 0}}});
  CHECK_THROWS_AS(weight_space_basis(PartitionTuple::parse("2|"), 2, 0), PreconditionError);
}

TEST_CASE("weight elements partition the labels") {
  for (const auto& sigma : sigma_family())
    for (int n = 0; n <= 5; ++n)
      for (int m = 0; m <= n; ++m)
        for (const auto& w : weight_space_basis(sigma, n, m)) {
          std::vector<int> seen(w.tensor);
          for (const auto& g : w.monomial) {
            CHECK(static_cast<int>(g.support.size()) == sigma[static_cast<std::size_t>(g.type)].size());
            CHECK(g.index < specht_dim(sigma[static_cast<std::size_t>(g.type)]));
            seen.insert(seen.end(), g.support.begin(), g.support.end());
          }
          std::sort(seen.begin(), seen.end());
          std::vector<int> all(static_cast<std::size_t>(n));
          std::iota(all.begin(), all.end(), 1);
          CHECK(seen == all);
          CHECK(static_cast<int>(w.tensor.size()) == m);
        }
}

TEST_CASE("the diagram pairing is a bijection") {
  for (const auto& sigma : sigma_family())
    for (int n = 0; n <= 6; ++n)
      for (int m = 0; m <= n; ++m) {
        const auto r = diagram_weight_iso(sigma, n, m);
        CHECK(r.diagrams == oracle::hom_count(sigma, n, m));
        CHECK(r.weight_elements == r.diagrams);
        CHECK(r.injective);
        CHECK(r.bijective);
        std::vector<std::size_t> sorted = r.image;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) CHECK(sorted[i] == i);
      }
}

TEST_CASE("evaluated representation dimensions") {
  CHECK(EvaluatedRep(Partition{1, 1}, 3).dim() == 3);
  CHECK(EvaluatedRep(Partition{2, 1}, 3).dim() == 8);
  CHECK(EvaluatedRep(Partition{2, 1}, 1).dim() == 0);
  CHECK(EvaluatedRep(Partition{}, 2).dim() == 1);
  for (int k = 0; k <= 4; ++k)
    for (const auto& lambda : partitions_of(k))
      for (int N = 0; N <= 3; ++N) CHECK(EvaluatedRep(lambda, N).dim() == oracle::ssyt_count(lambda, N));
  const EvaluatedRep v(Partition{1}, 3);
  std::mt19937_64 rng(2);
  const auto g = random_matrix(3, rng);
  CHECK(la::same_column_space(v.act(g), g));
  CHECK_THROWS_AS(v.act(la::RatMat::identity(2)), PreconditionError);
}

TEST_CASE("torus traces match principal specializations") {
  for (int k = 1; k <= 4; ++k)
    for (const auto& lambda : partitions_of(k))
      for (int N = 1; N <= 4; ++N) {
        const EvaluatedRep rep(lambda, N);
        for (long q : {2L, 3L}) {
          auto d = la::RatMat::identity(static_cast<std::size_t>(N));
          d(0, 0) = q;
          const auto m = rep.act(d);
          Rational tr = 0;
          for (std::size_t i = 0; i < m.rows(); ++i) tr += m(i, i);
          CHECK(tr == Rational(oracle::principal_specialization(lambda, N, q)));
        }
      }
}

TEST_CASE("the action is multiplicative") {
  std::mt19937_64 rng(9);
  for (const auto& lambda : {Partition{2, 1}, Partition{2}, Partition{1, 1, 1}, Partition{3, 1}})
    for (int N = 2; N <= 3; ++N) {
      const EvaluatedRep rep(lambda, N);
      for (int trial = 0; trial < 5; ++trial) {
        const auto g = random_matrix(N, rng);
        const auto h = random_matrix(N, rng);
        CHECK(rep.act(g * h) == rep.act(g) * rep.act(h));
      }
      CHECK(rep.act(la::RatMat::identity(static_cast<std::size_t>(N))) == la::RatMat::identity(rep.dim()));
      auto e = la::RatMat::identity(static_cast<std::size_t>(N));
      e(0, 1) = Rational(3, 2);
      CHECK(rep.elementary(0, 1, Rational(3, 2)) == rep.act(e));
    }
}
