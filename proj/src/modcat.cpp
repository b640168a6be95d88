#include "sigmabrauer/modcat.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>

#include "sigmabrauer/errors.hpp"
#include "sigmabrauer/symfun.hpp"

namespace sb::modcat {

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

std::size_t index_of(const std::vector<int>& w, int N) {
  std::size_t idx = 0;
  for (int x : w) idx = idx * static_cast<std::size_t>(N) + static_cast<std::size_t>(x);
  return idx;
}

struct FormBasis {
  std::vector<std::vector<int>> words;
  std::vector<la::RatMat> functionals;  // dim S^lambda x N^k each
};

// Omega_u(x) = 1/k! sum_g <x, g e_{T_0}> g.u for u = e_w^*.
la::RatMat word_functional(const SpechtModule& module, const std::vector<int>& w, int N,
                           const std::vector<std::pair<Permutation, la::Vector>>& weights) {
  const int k = module.degree();
  la::RatMat F(module.dim(), ipow(N, k));
  Rational scale(1, static_cast<unsigned long>(factorial(k)));
  scale.canonicalize();
  std::vector<int> v(static_cast<std::size_t>(k));
  for (const auto& [g, y] : weights) {
    for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(g[static_cast<std::size_t>(i)])] = w[static_cast<std::size_t>(i)];
    const std::size_t col = index_of(v, N);
    for (std::size_t j = 0; j < y.size(); ++j)
      if (sgn(y[j]) != 0) F(j, col) += scale * y[j];
  }
  return F;
}

// (g, Gram * rho(g) e_0) for all g in S_k.
std::vector<std::pair<Permutation, la::Vector>> gram_weights(const SpechtModule& module) {
  const int k = module.degree();
  std::vector<std::pair<Permutation, la::Vector>> out;
  Permutation g(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) g[static_cast<std::size_t>(i)] = i;
  la::Vector e0(module.dim());
  e0[0] = 1;
  do {
    out.emplace_back(g, module.gram().apply(module.act(g, e0)));
  } while (std::next_permutation(g.begin(), g.end()));
  return out;
}

const FormBasis& form_basis(const Partition& lambda, int N) {
  static std::mutex mutex;
  static std::map<std::pair<Partition, int>, FormBasis> cache;
  const auto key = std::make_pair(lambda, N);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  if (lambda.empty()) throw PreconditionError("form basis: shape must be nonempty");
  if (N < 1) throw PreconditionError("form basis: rank must be positive");
  const auto module = SpechtModule::get(lambda);
  const int k = lambda.size();
  const auto weights = gram_weights(*module);
  const std::size_t target = schur_dim(lambda, N);
  FormBasis fb;
  // incremental row reduction of flattened functionals
  std::vector<std::pair<std::size_t, la::Vector>> reduced;
  const std::size_t total = ipow(N, k);
  for (std::size_t idx = 0; idx < total && fb.words.size() < target; ++idx) {
    const auto w = word_of(idx, N, k);
    la::RatMat F = word_functional(*module, w, N, weights);
    la::Vector flat;
    for (std::size_t r = 0; r < F.rows(); ++r) flat.insert(flat.end(), F.row(r).begin(), F.row(r).end());
    for (const auto& [piv, row] : reduced) {
      if (sgn(flat[piv]) == 0) continue;
      const Rational f = flat[piv];
      for (std::size_t c = 0; c < flat.size(); ++c)
        if (sgn(row[c]) != 0) flat[c] -= f * row[c];
    }
    auto nz = std::find_if(flat.begin(), flat.end(), [](const Rational& x) { return sgn(x) != 0; });
    if (nz == flat.end()) continue;
    const auto piv = static_cast<std::size_t>(nz - flat.begin());
    const Rational inv = 1 / flat[piv];
    for (auto& x : flat) x *= inv;
    for (auto& [p2, row] : reduced)
      if (sgn(row[piv]) != 0) {
        const Rational f = row[piv];
        for (std::size_t c = 0; c < row.size(); ++c)
          if (sgn(flat[c]) != 0) row[c] -= f * flat[c];
      }
    reduced.emplace_back(piv, std::move(flat));
    fb.words.push_back(w);
    fb.functionals.push_back(std::move(F));
  }
  if (fb.words.size() != target) throw InternalError("form basis: functionals do not reach dim S_lambda(k^N)");
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(fb)).first->second;
}

SchurExpr sum_of_types(const PartitionTuple& sigma) {
  SchurExpr f;
  for (const auto& p : sigma.entries()) f += SchurExpr::schur(p);
  return f;
}

std::uint64_t to_count(const Rational& q, const char* what) {
  if (q.get_den() != 1 || sgn(q) < 0 || !q.get_num().fits_ulong_p())
    throw InternalError(std::string(what) + ": expected a non-negative integer, got " + to_string(q));
  return q.get_num().get_ui();
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int x = from; x <= n; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

struct Kernel {
  la::RatMat basis;
  std::vector<std::size_t> free_cols;
};

Kernel joint_kernel(const std::vector<la::RatMat>& constraints, std::size_t cols) {
  Kernel k;
  std::vector<bool> is_pivot(cols, false);
  la::Echelon e{la::RatMat(0, cols), {}};
  if (!constraints.empty()) e = la::echelon(la::vstack(constraints));
  for (auto c : e.pivots) is_pivot[c] = true;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) k.free_cols.push_back(c);
  k.basis = la::RatMat(cols, k.free_cols.size());
  for (std::size_t j = 0; j < k.free_cols.size(); ++j) {
    const std::size_t f = k.free_cols[j];
    k.basis(f, j) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      if (sgn(e.rref(i, f)) != 0) k.basis(e.pivots[i], j) = -e.rref(i, f);
  }
  return k;
}

}  // namespace

const std::vector<std::vector<int>>& form_words(const Partition& lambda, int N) {
  return form_basis(lambda, N).words;
}

FormPoint::FormPoint(int N, PartitionTuple sigma, std::vector<la::Vector> comps)
    : N_(N), sigma_(std::move(sigma)), comps_(std::move(comps)) {
  if (N < 1) throw PreconditionError("form point: rank must be at least 1");
  sigma_.require_pure();
  if (comps_.size() != sigma_.size()) throw PreconditionError("form point: one component per tuple entry");
  for (std::size_t p = 0; p < sigma_.size(); ++p) {
    const FormBasis& fb = form_basis(sigma_[p], N_);
    if (comps_[p].size() != fb.words.size())
      throw PreconditionError("form point: component " + std::to_string(p) + " needs " +
                              std::to_string(fb.words.size()) + " coordinates");
    const auto module = SpechtModule::get(sigma_[p]);
    la::RatMat F(module->dim(), ipow(N_, sigma_[p].size()));
    for (std::size_t w = 0; w < fb.words.size(); ++w)
      if (sgn(comps_[p][w]) != 0) F += comps_[p][w] * fb.functionals[w];
    functionals_.push_back(std::move(F));
  }
}

FormPoint FormPoint::random(int N, const PartitionTuple& sigma, std::uint64_t seed) {
  sigma.require_pure();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-5, 5);
  std::vector<la::Vector> comps;
  for (const auto& shape : sigma.entries()) {
    la::Vector c(form_words(shape, N).size());
    for (auto& x : c) x = dist(rng);
    comps.push_back(std::move(c));
  }
  return FormPoint(N, sigma, std::move(comps));
}

FormPoint FormPoint::from_polynomial(int N, int k, const std::vector<std::pair<std::vector<int>, Rational>>& coeffs) {
  const Partition shape{k};
  const auto& words = form_words(shape, N);
  la::Vector c(words.size());
  for (auto [w, x] : coeffs) {
    std::sort(w.begin(), w.end());
    auto it = std::find(words.begin(), words.end(), w);
    if (it == words.end()) throw PreconditionError("form point: monomial outside the variable range");
    c[static_cast<std::size_t>(it - words.begin())] += x;
  }
  return FormPoint(N, PartitionTuple{shape}, {c});
}

std::uint64_t multiplicity(const PartitionTuple& sigma, const Partition& lambda, const Partition& mu) {
  sigma.require_pure();
  if (mu.size() > lambda.size()) return 0;
  const SchurExpr prod = SchurExpr::schur(mu) * sym_algebra_degree(sigma, lambda.size() - mu.size());
  return to_count(prod.coefficient(lambda), "multiplicity");
}

std::uint64_t ext_dim(const PartitionTuple& sigma, int i, const Partition& lambda, const Partition& mu) {
  sigma.require_pure();
  if (i < 0) throw PreconditionError("ext: degree must be non-negative");
  const SchurExpr wedge = plethysm_e(i, sum_of_types(sigma));
  const SchurExpr prod = wedge * SchurExpr::schur(lambda);
  return to_count(prod.coefficient(mu), "ext");
}

la::RatMat theta_apply(const FormPoint& omega, const brauer::Morphism& f) {
  if (f.sigma() != omega.sigma()) throw PreconditionError("theta: morphism and form use different tuples");
  const int N = omega.rank();
  const int n = f.source();
  const int m = f.target();
  la::RatMat out(ipow(N, m), ipow(N, n));
  const std::size_t total = ipow(N, n);
  std::vector<std::size_t> stride(static_cast<std::size_t>(m) + 1, 1);
  for (int t = m - 1; t >= 1; --t)
    stride[static_cast<std::size_t>(t)] = stride[static_cast<std::size_t>(t) + 1] * static_cast<std::size_t>(N);
  for (const auto& [key, c] : f.terms()) {
    for (std::size_t idx = 0; idx < total; ++idx) {
      const auto v = word_of(idx, N, n);
      Rational value = c;
      for (const auto& b : key.blocks) {
        std::size_t sub = 0;
        for (int s : b.support) sub = sub * static_cast<std::size_t>(N) + static_cast<std::size_t>(v[static_cast<std::size_t>(s - 1)]);
        const Rational& x = omega.block_functional(static_cast<std::size_t>(b.type))(b.index, sub);
        if (sgn(x) == 0) {
          value = 0;
          break;
        }
        value *= x;
      }
      if (sgn(value) == 0) continue;
      std::size_t row = 0;
      for (auto [s, t] : key.matching)
        row += stride[static_cast<std::size_t>(t)] * static_cast<std::size_t>(v[static_cast<std::size_t>(s - 1)]);
      out(row, idx) += value;
    }
  }
  return out;
}

SnRepresentation tensor_power_rep(int N, int n) {
  SnRepresentation rep;
  rep.degree = n;
  rep.dim = ipow(N, n);
  for (int k = 0; k + 1 < n; ++k) {
    la::RatMat g(rep.dim, rep.dim);
    for (std::size_t idx = 0; idx < rep.dim; ++idx) {
      auto w = word_of(idx, N, n);
      std::swap(w[static_cast<std::size_t>(k)], w[static_cast<std::size_t>(k) + 1]);
      g(index_of(w, N), idx) = 1;
    }
    rep.generators.push_back(std::move(g));
  }
  return rep;
}

TracelessSpace traceless_space(const FormPoint& omega, int n) {
  if (n < 0) throw PreconditionError("traceless: degree must be non-negative");
  const int N = omega.rank();
  const auto& sigma = omega.sigma();
  std::vector<la::RatMat> constraints;
  for (std::size_t p = 0; p < sigma.size(); ++p) {
    const int k = sigma[p].size();
    if (k > n) continue;
    const std::size_t dim = SpechtModule::get(sigma[p])->dim();
    for (const auto& S : subsets(n, k)) {
      brauer::DiagramKey key;
      int next = 1;
      for (int s = 1; s <= n; ++s)
        if (!std::binary_search(S.begin(), S.end(), s)) key.matching.emplace_back(s, next++);
      for (std::size_t x = 0; x < dim; ++x) {
        key.blocks = {brauer::BasisBlock{S, static_cast<int>(p), x}};
        constraints.push_back(theta_apply(omega, brauer::Morphism::basis(sigma, n, n - k, key)));
      }
    }
  }
  const Kernel ker = joint_kernel(constraints, ipow(N, n));
  TracelessSpace t;
  t.rank = N;
  t.degree = n;
  t.basis = ker.basis;
  const auto rep = tensor_power_rep(N, n);
  for (const auto& g : rep.generators) {
    const la::RatMat moved = g * t.basis;
    la::RatMat r(ker.free_cols.size(), ker.free_cols.size());
    for (std::size_t i = 0; i < ker.free_cols.size(); ++i)
      for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = moved(ker.free_cols[i], j);
    t.generators.push_back(std::move(r));
  }
  return t;
}

std::size_t simple_realization_dim(const FormPoint& omega, const Partition& lambda) {
  const int n = lambda.size();
  const TracelessSpace t = traceless_space(omega, n);
  const auto rep = tensor_power_rep(omega.rank(), n);
  const std::size_t r = la::rank(isotypic_projector_on(lambda, rep, t.basis));
  if (r % specht_dim(lambda) != 0)
    throw InternalError("simple realization: isotypic rank " + std::to_string(r) +
                        " is not a multiple of dim S^lambda = " + std::to_string(specht_dim(lambda)));
  return r / specht_dim(lambda);
}

InjectivePresentation injective_presentation(const PartitionTuple& sigma, const Partition& lambda) {
  sigma.require_pure();
  InjectivePresentation out{lambda, {}};
  const int n = lambda.size();
  for (int m = 0; m < n; ++m) {
    const auto keys = brauer::hom_basis(sigma, n, m);
    if (keys.empty()) continue;
    std::vector<brauer::Morphism> maps;
    for (const auto& k : keys) maps.push_back(brauer::Morphism::basis(sigma, n, m, k));
    for (const auto& mu : partitions_of(m)) out.lower_maps.emplace_back(mu, maps);
  }
  return out;
}

bool socle_check(const FormPoint& omega, const Partition& lambda) {
  const int n = lambda.size();
  if (n == 0) return true;
  const auto pres = injective_presentation(omega.sigma(), lambda);
  std::vector<la::RatMat> constraints;
  std::set<int> done;
  for (const auto& [mu, maps] : pres.lower_maps) {
    if (!done.insert(mu.size()).second) continue;
    for (const auto& f : maps) constraints.push_back(theta_apply(omega, f));
  }
  const auto rep = tensor_power_rep(omega.rank(), n);
  const Kernel all = joint_kernel(constraints, ipow(omega.rank(), n));
  const TracelessSpace t = traceless_space(omega, n);
  return la::same_column_space(isotypic_projector_on(lambda, rep, t.basis),
                               isotypic_projector_on(lambda, rep, all.basis));
}

}  // namespace sb::modcat
