#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sigmabrauer/errors.hpp"
#include "sigmabrauer/exactla.hpp"

using namespace sb;

namespace {

la::RatMat random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, bool dependent) {
  std::uniform_int_distribution<int> dist(-3, 3);
  la::RatMat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      m(i, j) = Rational(Integer(dist(rng)), Integer(1 + (dist(rng) + 3) % 2));
      m(i, j).canonicalize();
    }
  if (dependent && r >= 3)
    for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = 2 * m(0, j) - m(1, j);
  return m;
}

oracle::Rows rows_of(const la::RatMat& m) {
  oracle::Rows rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.emplace_back(m.row(i).begin(), m.row(i).end());
  return rows;
}

}  // namespace

TEST_CASE("rational text round trip") {
  CHECK(to_string(parse_rational("3/6")) == "1/2");
  CHECK(to_string(parse_rational("-4/2")) == "-2");
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK(to_string(parse_rational("0/5")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("matrix arithmetic") {
  const la::RatMat a{{1, 2}, {3, 4}};
  const la::RatMat b{{0, 1}, {1, 0}};
  CHECK(la::RatMat::identity(2) * a == a);
  CHECK(a * b == la::RatMat{{2, 1}, {4, 3}});
  CHECK(a + b - b == a);
  CHECK(a.transpose() == la::RatMat{{1, 3}, {2, 4}});
  const auto k = la::kronecker(b, a);
  CHECK(k.rows() == 4);
  CHECK(k(0, 2) == 1);
  CHECK(k(1, 3) == 4);
  CHECK(k(0, 0) == 0);
  const std::vector<Rational> v{1, 1};
  CHECK(a.apply(v) == std::vector<Rational>{3, 7});
}

TEST_CASE("rank agrees with naive elimination") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> dim(1, 7);
  for (int trial = 0; trial < 150; ++trial) {
    const auto m = random_matrix(dim(rng), dim(rng), rng, trial % 2 == 0);
    CHECK(la::rank(m) == oracle::rank(rows_of(m), m.cols()));
  }
}

TEST_CASE("echelon form is reduced") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = random_matrix(5, 6, rng, true);
    const auto e = la::echelon(m);
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      for (std::size_t r = 0; r < e.pivots.size(); ++r) CHECK(e.rref(r, e.pivots[i]) == (r == i ? 1 : 0));
    CHECK(la::same_column_space(m.transpose(), e.rref.transpose()));
  }
}

TEST_CASE("kernel basis") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const auto m = random_matrix(4, 7, rng, true);
    const auto ker = la::kernel_basis(m);
    CHECK(ker.size() == m.cols() - la::rank(m));
    for (const auto& v : ker)
      for (const auto& x : m.apply(v)) CHECK(x == 0);
    CHECK(ker.size() == oracle::kernel(rows_of(m), m.cols()).basis.size());
  }
}

TEST_CASE("kernel intersection equals the stacked kernel") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const std::vector<la::RatMat> parts{random_matrix(2, 6, rng, false), random_matrix(3, 6, rng, true)};
    const auto joint = la::intersect_kernels(parts, 6);
    CHECK(joint.size() == la::kernel_basis(la::vstack(parts)).size());
  }
  const std::vector<la::RatMat> bad{la::RatMat(1, 2), la::RatMat(1, 3)};
  CHECK_THROWS_AS(la::intersect_kernels(bad, 2), PreconditionError);
}

TEST_CASE("solving in a column span") {
  const la::RatMat basis{{1, 0}, {0, 1}, {1, 1}};
  la::RatMat x;
  CHECK(la::solve_columns(basis, la::RatMat{{2}, {3}, {5}}, x));
  CHECK(x == la::RatMat{{2}, {3}});
  CHECK_FALSE(la::solve_columns(basis, la::RatMat{{1}, {1}, {0}}, x));
  la::Vector y;
  CHECK(la::solve_in_span(basis, std::vector<Rational>{Rational(1, 2), 1, Rational(3, 2)}, y));
  CHECK(y == la::Vector{Rational(1, 2), 1});
  CHECK(la::column_space(la::RatMat{{1, 2, 0}, {2, 4, 1}}).cols() == 2);
  CHECK(la::same_column_space(la::RatMat{{1}, {1}}, la::RatMat{{3}, {3}}));
  CHECK_FALSE(la::same_column_space(la::RatMat{{1}, {0}}, la::RatMat{{0}, {1}}));
}
