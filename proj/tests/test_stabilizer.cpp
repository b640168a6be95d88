#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sigmabrauer/errors.hpp"
#include "sigmabrauer/stabilizer.hpp"

using namespace sb;
using namespace sb::stabilizer;
using modcat::FormPoint;

namespace {

using Poly = std::vector<std::pair<std::vector<int>, Rational>>;

Rational evaluate(const Poly& f, const std::vector<Rational>& x) {
  Rational total = 0;
  for (const auto& [word, c] : f) {
    Rational term = c;
    for (int i : word) term *= x[static_cast<std::size_t>(i)];
    total += term;
  }
  return total;
}

// g lies in Gamma(n) iff f(g x) = f(x) for x in k^n. Both sides have degree
// at most 3 in each variable, so agreement on the grid {0..3}^n is exact.
bool in_gamma_by_evaluation(const Poly& f, int M, int n, const la::RatMat& g) {
  std::vector<int> point(static_cast<std::size_t>(n), 0);
  for (;;) {
    std::vector<Rational> x(static_cast<std::size_t>(M));
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = point[static_cast<std::size_t>(i)];
    if (evaluate(f, g.apply(x)) != evaluate(f, x)) return false;
    int i = 0;
    while (i < n && point[static_cast<std::size_t>(i)] == 3) point[static_cast<std::size_t>(i++)] = 0;
    if (i == n) return true;
    ++point[static_cast<std::size_t>(i)];
  }
}

Poly random_cubic(int M, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-5, 5);
  Poly f;
  for (int a = 0; a < M; ++a)
    for (int b = a; b < M; ++b)
      for (int c = b; c < M; ++c) f.push_back({{a, b, c}, dist(rng)});
  return f;
}

la::RatMat random_invertible(int M, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-2, 2);
  for (;;) {
    la::RatMat g(static_cast<std::size_t>(M), static_cast<std::size_t>(M));
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) = dist(rng);
    if (la::rank(g) == g.rows()) return g;
  }
}

la::RatMat permutation_matrix(const std::vector<int>& images) {
  la::RatMat p(images.size(), images.size());
  for (std::size_t i = 0; i < images.size(); ++i) p(static_cast<std::size_t>(images[i]), i) = 1;
  return p;
}

const Poly monomial{{{0, 1, 2}, 1}};

}  // namespace

TEST_CASE("GL elements are normalized") {
  CHECK(GLElement(la::RatMat::identity(4)) == GLElement::identity());
  CHECK(GLElement(la::RatMat::identity(4)).size() == 0);
  const GLElement a(la::RatMat{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  CHECK(a.size() == 2);
  CHECK(a.extended(3) == la::RatMat{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  CHECK(GLElement::block(2, la::RatMat{{2}}).size() == 3);
  CHECK(GLElement::block(2, la::RatMat{{1}}) == GLElement::identity());
  CHECK(a * a == GLElement::identity());
  CHECK_THROWS_AS(GLElement(la::RatMat{{1, 2}, {2, 4}}), PreconditionError);
  CHECK_THROWS_AS(GLElement(la::RatMat(2, 3)), PreconditionError);
  CHECK_THROWS_AS(a.extended(1), PreconditionError);
}

TEST_CASE("membership examples") {
  const auto generic = FormPoint::random(3, PartitionTuple::parse("3"), 17);
  CHECK(in_gamma(generic, 3, GLElement::identity()));
  CHECK(in_gamma(generic, 2, GLElement::block(2, la::RatMat{{5}})));
  CHECK_FALSE(in_gamma(generic, 2, GLElement(permutation_matrix({1, 0}))));
  CHECK_THROWS_WITH_AS(in_gamma(generic, 4, GLElement::identity()), "gamma: form is known at rank 3 but the query needs rank M >= 4",
                       PreconditionError);

  const auto mono = FormPoint::from_polynomial(3, 3, monomial);
  CHECK(in_gamma(mono, 3, GLElement(permutation_matrix({1, 2, 0}))));
  CHECK(in_gamma(mono, 3, GLElement(la::RatMat{{2, 0, 0}, {0, Rational(1, 2), 0}, {0, 0, 1}})));
  // On k^1 the monomial vanishes, so any g whose first column has a zero entry preserves it.
  CHECK(in_gamma(mono, 1, GLElement(la::RatMat{{1, 0, 0}, {0, 1, 0}, {5, 0, 1}})));
  CHECK_FALSE(in_gamma(mono, 1, GLElement(la::RatMat{{1, 0, 0}, {1, 1, 0}, {1, 0, 1}})));
}

TEST_CASE("membership agrees with polynomial evaluation") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int M = 3;
    const Poly f = trial % 4 == 0 ? monomial : random_cubic(M, rng);
    const auto omega = FormPoint::from_polynomial(M, 3, f);
    const auto symmetries = permutation_symmetries(omega);
    for (int n = 0; n <= M; ++n) {
      const auto g = random_invertible(M, rng);
      CHECK(in_gamma(omega, n, GLElement(g)) == in_gamma_by_evaluation(f, M, n, g));
      const auto member = sample_gamma(M, n, symmetries, rng);
      CHECK(in_gamma_by_evaluation(f, M, n, member.extended(M)));
      CHECK(in_gamma(omega, n, member));
    }
  }
}

TEST_CASE("permutation symmetries") {
  CHECK(permutation_symmetries(FormPoint::from_polynomial(3, 3, monomial)).size() == 6);
  CHECK(permutation_symmetries(FormPoint::from_polynomial(3, 3, {{{0, 0, 0}, 1}, {{1, 1, 1}, 1}})).size() == 2);
  const auto generic = FormPoint::random(4, PartitionTuple::parse("3"), 99);
  const auto sym = permutation_symmetries(generic);
  REQUIRE(sym.size() == 1);
  CHECK(sym[0] == GLElement::identity());
}

TEST_CASE("product level") {
  CHECK(gamma_product_level(GLElement(la::RatMat{{0, 1}, {1, 0}}), 5) == 5);
  CHECK(gamma_product_level(GLElement::block(6, la::RatMat{{2}}), 3) == 7);
  std::mt19937_64 rng(31);
  const auto omega = FormPoint::from_polynomial(4, 3, {{{0, 1, 2}, 1}, {{3, 3, 3}, 2}});
  const auto sym = permutation_symmetries(omega);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 3;
    const auto g = sample_gamma(4, n, sym, rng);
    const int j = gamma_product_level(g, n);
    const auto h = sample_gamma(4, j, sym, rng);
    REQUIRE(in_gamma(omega, n, g));
    CHECK(in_gamma(omega, n, h * g));
  }
}

TEST_CASE("germinal axiom suite") {
  const auto check_all = [](const FormPoint& omega, std::vector<int> levels) {
    const auto reports = germinal_axiom_suite(omega, levels, 100, 5);
    REQUIRE(reports.size() == 3);
    for (const auto& r : reports) {
      CHECK(r.samples >= 100);
      CHECK(r.passes == r.samples);
      CHECK(r.failures.empty());
    }
    CHECK(reports[0].axiom == "a");
    CHECK(reports[2].axiom == "c");
  };
  check_all(FormPoint::from_polynomial(3, 3, monomial), {1, 2, 3});
  for (int M = 2; M <= 5; ++M) {
    std::vector<int> levels;
    for (int i = 1; i <= M; ++i) levels.push_back(i);
    check_all(FormPoint::random(M, PartitionTuple::parse("3"), static_cast<std::uint64_t>(M)), levels);
  }
  CHECK_THROWS_AS(germinal_axiom_suite(FormPoint::random(2, PartitionTuple::parse("3"), 1), {3}, 10, 1),
                  PreconditionError);
}

TEST_CASE("gamma linearity") {
  const auto three = PartitionTuple::parse("3");
  const auto block = brauer::Morphism::basis(three, 3, 0, brauer::DiagramKey{{}, {{{1, 2, 3}, 0, 0}}});
  const auto mono = FormPoint::from_polynomial(3, 3, monomial);
  const GLElement cyclic(permutation_matrix({1, 2, 0}));
  la::Vector v(27);
  v[0 * 9 + 1 * 3 + 2] = 1;
  v[1 * 9 + 1 * 3 + 0] = -2;
  CHECK(gamma_linearity_check(mono, block, 3, cyclic, v));

  const auto generic = FormPoint::random(3, three, 17);
  la::Vector low(27);
  low[0] = 3;
  low[1 * 9 + 0 * 3 + 1] = 1;
  CHECK(gamma_linearity_check(generic, block, 2, GLElement::block(2, la::RatMat{{4}}), low));
  la::Vector pair(9);
  for (std::size_t idx : {0u, 1u, 3u, 4u}) pair[idx] = static_cast<long>(idx) + 1;
  CHECK(gamma_linearity_check(generic, brauer::Morphism::identity(three, 2), 2, GLElement::block(2, la::RatMat{{4}}), pair));

  // Negative control: the swap is not in Gamma(2) of a generic cubic.
  la::Vector e111(27);
  e111[0] = 1;
  CHECK_FALSE(gamma_linearity_check(generic, block, 2, GLElement(permutation_matrix({1, 0})), e111));

  la::Vector outside(27);
  outside[26] = 1;
  CHECK_THROWS_AS(gamma_linearity_check(generic, block, 2, GLElement::identity(), outside), PreconditionError);
  CHECK_THROWS_AS(gamma_linearity_check(generic, block, 2, GLElement::identity(), la::Vector(8)), PreconditionError);
  CHECK_THROWS_AS(gamma_linearity_check(generic, block, 4, GLElement::identity(), la::Vector(27)), PreconditionError);
}
