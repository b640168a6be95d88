#include "sigmabrauer/stabilizer.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "sigmabrauer/errors.hpp"

namespace sb::stabilizer {

namespace {

std::size_t ipow(int b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= static_cast<std::size_t>(b);
  return r;
}

std::vector<int> word_of(std::size_t idx, int N, int k) {
  std::vector<int> w(static_cast<std::size_t>(k));
  for (int i = k - 1; i >= 0; --i) {
    w[static_cast<std::size_t>(i)] = static_cast<int>(idx % static_cast<std::size_t>(N));
    idx /= static_cast<std::size_t>(N);
  }
  return w;
}

// Nonzero entries (index, value) of g^{(x)k} e_v.
std::vector<std::pair<std::size_t, Rational>> tensor_column(const la::RatMat& g, const std::vector<int>& v) {
  const std::size_t M = g.rows();
  std::vector<std::pair<std::size_t, Rational>> out{{0, Rational(1)}};
  for (int letter : v) {
    std::vector<std::pair<std::size_t, Rational>> next;
    for (std::size_t r = 0; r < M; ++r) {
      const Rational& x = g(r, static_cast<std::size_t>(letter));
      if (sgn(x) == 0) continue;
      for (const auto& [idx, c] : out) next.emplace_back(idx * M + r, c * x);
    }
    out = std::move(next);
  }
  return out;
}

la::RatMat tensor_power(const la::RatMat& g, int k) {
  la::RatMat p = la::RatMat::identity(1);
  for (int i = 0; i < k; ++i) p = la::kronecker(p, g);
  return p;
}

void require_level(const modcat::FormPoint& omega, int n, const GLElement& g) {
  if (n < 0) throw PreconditionError("gamma: level must be non-negative");
  const int need = std::max(n, g.size());
  if (omega.rank() < need)
    throw PreconditionError("gamma: form is known at rank " + std::to_string(omega.rank()) +
                            " but the query needs rank M >= " + std::to_string(need));
}

la::RatMat random_invertible(int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-3, 3);
  for (;;) {
    la::RatMat a(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = dist(rng);
    if (la::rank(a) == a.rows()) return a;
  }
}

}  // namespace

GLElement::GLElement(la::RatMat mat) {
  if (mat.rows() != mat.cols()) throw PreconditionError("GL element: matrix must be square");
  if (la::rank(mat) != mat.rows()) throw PreconditionError("GL element: matrix must be invertible");
  std::size_t m = mat.rows();
  auto trailing_identity = [&](std::size_t k) {
    for (std::size_t i = 0; i < m; ++i) {
      const Rational want = i == k ? 1 : 0;
      if (mat(k, i) != want || mat(i, k) != want) return false;
    }
    return true;
  };
  while (m > 0 && trailing_identity(m - 1)) --m;
  mat_ = la::RatMat(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) mat_(i, j) = mat(i, j);
}

GLElement GLElement::block(int j, const la::RatMat& a) {
  if (j < 0) throw PreconditionError("GL element: block offset must be non-negative");
  if (a.rows() != a.cols()) throw PreconditionError("GL element: block must be square");
  const std::size_t m = static_cast<std::size_t>(j) + a.rows();
  la::RatMat g = la::RatMat::identity(m);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) g(static_cast<std::size_t>(j) + r, static_cast<std::size_t>(j) + c) = a(r, c);
  return GLElement(std::move(g));
}

la::RatMat GLElement::extended(int M) const {
  if (M < size()) throw PreconditionError("GL element: cannot truncate below its size");
  la::RatMat g = la::RatMat::identity(static_cast<std::size_t>(M));
  for (std::size_t i = 0; i < mat_.rows(); ++i)
    for (std::size_t j = 0; j < mat_.cols(); ++j) g(i, j) = mat_(i, j);
  return g;
}

GLElement operator*(const GLElement& a, const GLElement& b) {
  const int m = std::max(a.size(), b.size());
  return GLElement(a.extended(m) * b.extended(m));
}

bool in_gamma(const modcat::FormPoint& omega, int n, const GLElement& g) {
  require_level(omega, n, g);
  const int M = omega.rank();
  const la::RatMat gm = g.extended(M);
  const auto& sigma = omega.sigma();
  for (std::size_t p = 0; p < sigma.size(); ++p) {
    const int k = sigma[p].size();
    const la::RatMat& F = omega.block_functional(p);
    for (std::size_t idx = 0; idx < ipow(n, k); ++idx) {
      const auto v = word_of(idx, n, k);
      std::size_t col = 0;
      for (int x : v) col = col * static_cast<std::size_t>(M) + static_cast<std::size_t>(x);
      const auto moved = tensor_column(gm, v);
      for (std::size_t j = 0; j < F.rows(); ++j) {
        Rational acc = 0;
        for (const auto& [w, c] : moved)
          if (sgn(F(j, w)) != 0) acc += c * F(j, w);
        if (acc != F(j, col)) return false;
      }
    }
  }
  return true;
}

int gamma_product_level(const GLElement& g, int n) { return std::max(n, g.size()); }

std::vector<GLElement> permutation_symmetries(const modcat::FormPoint& omega) {
  const int M = omega.rank();
  std::vector<int> perm(static_cast<std::size_t>(M));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<GLElement> out;
  do {
    la::RatMat g(static_cast<std::size_t>(M), static_cast<std::size_t>(M));
    for (int i = 0; i < M; ++i) g(static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]), static_cast<std::size_t>(i)) = 1;
    GLElement e(std::move(g));
    if (in_gamma(omega, M, e)) out.push_back(std::move(e));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

GLElement sample_gamma(int M, int j, const std::vector<GLElement>& symmetries, std::mt19937_64& rng) {
  if (j < 0 || j > M) throw PreconditionError("gamma sampler: level must lie in [0, M]");
  GLElement b = j < M ? GLElement::block(j, random_invertible(M - j, rng)) : GLElement();
  if (symmetries.empty()) return b;
  std::uniform_int_distribution<std::size_t> pick(0, symmetries.size() - 1);
  return symmetries[pick(rng)] * b;
}

std::vector<AxiomReport> germinal_axiom_suite(const modcat::FormPoint& omega, const std::vector<int>& levels,
                                              std::size_t samples, std::uint64_t seed) {
  const int M = omega.rank();
  if (levels.empty()) throw PreconditionError("germinal suite: no levels given");
  for (int l : levels)
    if (l < 0 || l > M) throw PreconditionError("germinal suite: levels must lie in [0, " + std::to_string(M) + "]");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_level(0, levels.size() - 1);
  std::uniform_int_distribution<int> pick_pad(0, M);
  const auto symmetries = permutation_symmetries(omega);
  std::vector<AxiomReport> reports{{"a", 0, 0, {}}, {"b", 0, 0, {}}, {"c", 0, 0, {}}};

  for (std::size_t s = 0; s < samples; ++s) {
    const int i = levels[s % levels.size()];
    const GLElement id(la::RatMat::identity(static_cast<std::size_t>(pick_pad(rng))));
    ++reports[0].samples;
    if (in_gamma(omega, i, id)) ++reports[0].passes;
    else reports[0].failures.push_back("identity outside level " + std::to_string(i));
  }

  for (std::size_t s = 0; s < samples; ++s) {
    const int j = levels[pick_level(rng)];
    const GLElement g = sample_gamma(M, j, symmetries, rng);
    ++reports[1].samples;
    std::string failure;
    if (!in_gamma(omega, j, g)) failure = "sample " + std::to_string(s) + " not in level " + std::to_string(j);
    for (int i : levels)
      if (failure.empty() && i <= j && !in_gamma(omega, i, g))
        failure = "sample " + std::to_string(s) + " in level " + std::to_string(j) + " but not in level " +
                  std::to_string(i);
    if (failure.empty()) ++reports[1].passes;
    else reports[1].failures.push_back(failure);
  }

  for (std::size_t s = 0; s < samples; ++s) {
    const int n = levels[pick_level(rng)];
    const GLElement g = sample_gamma(M, n, symmetries, rng);
    ++reports[2].samples;
    if (!in_gamma(omega, n, g)) {
      reports[2].failures.push_back("sample " + std::to_string(s) + " not in level " + std::to_string(n));
      continue;
    }
    const int j = gamma_product_level(g, n);
    const GLElement h = sample_gamma(M, j, symmetries, rng);
    if (in_gamma(omega, j, h) && in_gamma(omega, n, h * g)) ++reports[2].passes;
    else reports[2].failures.push_back("sample " + std::to_string(s) + ": product leaves level " + std::to_string(n));
  }
  return reports;
}

bool gamma_linearity_check(const modcat::FormPoint& omega, const brauer::Morphism& f, int n, const GLElement& g,
                           const la::Vector& v) {
  require_level(omega, n, g);
  const int M = omega.rank();
  const int a = f.source();
  if (v.size() != ipow(M, a)) throw PreconditionError("gamma linearity: vector length must be M^source");
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    if (sgn(v[idx]) == 0) continue;
    const auto w = word_of(idx, M, a);
    if (std::any_of(w.begin(), w.end(), [n](int x) { return x >= n; }))
      throw PreconditionError("gamma linearity: vector is not supported on k^n");
  }
  const la::RatMat theta = modcat::theta_apply(omega, f);
  const la::RatMat gm = g.extended(M);
  const la::Vector lhs = theta.apply(tensor_power(gm, a).apply(v));
  const la::Vector rhs = tensor_power(gm, f.target()).apply(theta.apply(v));
  return lhs == rhs;
}

}  // namespace sb::stabilizer
