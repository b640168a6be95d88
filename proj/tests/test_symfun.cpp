#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sigmabrauer/errors.hpp"
#include "sigmabrauer/symfun.hpp"

using namespace sb;

namespace {

SchurExpr s(std::initializer_list<int> parts) { return SchurExpr::schur(Partition(parts)); }

std::vector<SchurExpr> inner_family() {
  std::vector<SchurExpr> out;
  for (int d = 1; d <= 3; ++d)
    for (const auto& p : partitions_of(d)) out.push_back(SchurExpr::schur(p));
  out.push_back(s({2}) + s({1, 1}));
  out.push_back(s({1}) + s({2}));
  out.push_back(Rational(2) * s({1}));
  out.push_back(s({2, 1}) + s({3}));
  return out;
}

}  // namespace

TEST_CASE("Littlewood-Richardson products") {
  CHECK(s({1}) * s({1}) == s({2}) + s({1, 1}));
  CHECK(s({2, 1}) * SchurExpr::one() == s({2, 1}));
  CHECK(s({2}) * s({2}) == s({4}) + s({3, 1}) + s({2, 2}));
  CHECK(lr_coefficient(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}) == 2);
  CHECK(lr_coefficient(Partition{2, 2}, Partition{2}, Partition{1, 1}) == 0);
  CHECK((s({2}) * s({1})).str() == "s[2,1] + s[3]");
}

TEST_CASE("products agree with monomial multiplication") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (const auto& mu : partitions_of(a))
        for (const auto& nu : partitions_of(b)) CHECK(lr_product(mu, nu) == oracle::schur_product(mu, nu));
}

TEST_CASE("products are commutative and associative") {
  std::mt19937_64 rng(21);
  std::vector<Partition> pool;
  for (int n = 0; n <= 4; ++n)
    for (const auto& p : partitions_of(n)) pool.push_back(p);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = SchurExpr::schur(pool[pick(rng)]);
    const auto b = SchurExpr::schur(pool[pick(rng)]);
    const auto c = SchurExpr::schur(pool[pick(rng)]);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("skew Schur functions") {
  CHECK(skew(Partition{2, 1}, Partition{1}) == s({2}) + s({1, 1}));
  CHECK(skew(Partition{2}, Partition{1, 1}).is_zero());
  CHECK(skew(Partition{3, 1}, Partition{}) == s({3, 1}));
}

TEST_CASE("plethysm examples") {
  CHECK(plethysm_h(1, s({2})) == s({2}));
  CHECK(plethysm_h(2, s({2})) == s({4}) + s({2, 2}));
  CHECK(plethysm_e(2, s({2})) == s({3, 1}));
  CHECK(plethysm_h(0, s({2})) == SchurExpr::one());
  for (int a = 0; a <= 6; ++a) {
    CHECK(plethysm_h(a, s({1})) == SchurExpr::schur(Partition::from_unsorted({a})));
    CHECK(plethysm_e(a, s({1})) == SchurExpr::schur(Partition(std::vector<int>(static_cast<std::size_t>(a), 1))));
  }
  CHECK(adams(2, s({1})) == s({2}) - s({1, 1}));
  CHECK_THROWS_AS(plethysm_h(2, s({2}) - s({1, 1})), PreconditionError);
  CHECK_THROWS_AS(plethysm_e(2, Rational(1, 2) * s({1})), PreconditionError);
}

TEST_CASE("plethysm agrees with monomial substitution") {
  for (const auto& f : inner_family())
    for (int a = 1; a <= 3; ++a) {
      if (a * f.max_degree() > 9) continue;
      CHECK_MESSAGE(plethysm_h(a, f) == oracle::plethysm(a, f, false), "h_" << a << "[" << f.str() << "]");
      CHECK_MESSAGE(plethysm_e(a, f) == oracle::plethysm(a, f, true), "e_" << a << "[" << f.str() << "]");
    }
}

TEST_CASE("Koszul identity") {
  for (const auto& f : {s({2}), s({3}), s({1, 1})})
    for (int d = 1; d <= 8; ++d) {
      SchurExpr total;
      for (int i = 0; i <= d; ++i) {
        const SchurExpr term = plethysm_e(i, f) * plethysm_h(d - i, f);
        if (i % 2 == 0) total += term;
        else total -= term;
      }
      CHECK_MESSAGE(total.is_zero(), f.str() << " d=" << d);
    }
}

TEST_CASE("graded pieces of the symmetric algebra") {
  const auto two = PartitionTuple::parse("2");
  CHECK(sym_algebra_degree(two, 0) == SchurExpr::one());
  CHECK(sym_algebra_degree(two, 2) == s({2}));
  CHECK(sym_algebra_degree(two, 3).is_zero());
  CHECK(sym_algebra_degree(two, 4) == s({4}) + s({2, 2}));
  CHECK(sym_algebra_degree(PartitionTuple::parse("1|1"), 2) == Rational(3) * s({2}) + s({1, 1}));
  CHECK_THROWS_AS(sym_algebra_degree(PartitionTuple::parse("2|"), 2), PreconditionError);
}

TEST_CASE("Hall inner product") {
  CHECK(inner_product(s({2, 1}), s({2, 1})) == 1);
  CHECK(inner_product(s({2}), s({1, 1})) == 0);
  CHECK(inner_product(s({2, 2}), s({2}) * s({2})) == 1);
}

TEST_CASE("shift decomposition") {
  using M = std::map<Partition, std::uint64_t>;
  CHECK(shift_decompose(Partition{2, 1}, 0) == M{{Partition{2, 1}, 1}});
  CHECK(shift_decompose(Partition{2}, 1) == M{{Partition{}, 1}, {Partition{1}, 1}, {Partition{2}, 1}});
  CHECK(shift_decompose(Partition{1, 1}, 2) == M{{Partition{}, 1}, {Partition{1}, 2}, {Partition{1, 1}, 1}});
  for (int k = 0; k <= 5; ++k)
    for (const auto& lambda : partitions_of(k))
      for (int n = 0; n <= 3; ++n) {
        const auto sh = shift_decompose(lambda, n);
        CHECK(sh.at(lambda) == 1);
        for (const auto& [nu, c] : sh)
          if (nu != lambda) CHECK(nu.size() < lambda.size());
        for (int N = 0; N <= 4; ++N) {
          std::uint64_t total = 0;
          for (const auto& [nu, c] : sh) total += c * schur_dim(nu, N);
          CHECK(total == schur_dim(lambda, n + N));
        }
      }
}
