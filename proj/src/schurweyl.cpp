#include "sigmabrauer/schurweyl.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "sigmabrauer/errors.hpp"
#include "sigmabrauer/specht.hpp"

namespace sb::schurweyl {

std::vector<WeightBasisElement> weight_space_basis(const PartitionTuple& sigma, int n, int m) {
  sigma.require_pure();
  if (n < 0 || m < 0) throw PreconditionError("weight_space_basis: sizes must be non-negative");
  std::vector<WeightBasisElement> out;
  if (m > n) return out;
  std::vector<int> tensor;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);

  // Set partitions of the remaining labels as restricted growth strings,
  // then a type and a Specht index for every part.
  auto partitions_of_rest = [&]() {
    std::vector<int> rest;
    for (int x = 1; x <= n; ++x)
      if (!used[static_cast<std::size_t>(x)]) rest.push_back(x);
    std::vector<int> rgs(rest.size(), 0);
    std::function<void(std::size_t, int)> grow = [&](std::size_t i, int parts) {
      if (i == rest.size()) {
        std::vector<std::vector<int>> blocks(static_cast<std::size_t>(parts));
        for (std::size_t k = 0; k < rest.size(); ++k) blocks[static_cast<std::size_t>(rgs[k])].push_back(rest[k]);
        std::vector<Generator> mono(blocks.size());
        std::function<void(std::size_t)> decorate = [&](std::size_t b) {
          if (b == blocks.size()) {
            WeightBasisElement w{mono, tensor};
            std::sort(w.monomial.begin(), w.monomial.end());
            out.push_back(std::move(w));
            return;
          }
          for (std::size_t p = 0; p < sigma.size(); ++p) {
            if (sigma[p].size() != static_cast<int>(blocks[b].size())) continue;
            const std::size_t dim = specht_dim(sigma[p]);
            for (std::size_t x = 0; x < dim; ++x) {
              mono[b] = Generator{blocks[b], static_cast<int>(p), x};
              decorate(b + 1);
            }
          }
        };
        decorate(0);
        return;
      }
      for (int r = 0; r <= parts; ++r) {
        rgs[i] = r;
        grow(i + 1, std::max(parts, r + 1));
      }
    };
    grow(0, 0);
  };

  std::function<void()> choose_tensor = [&]() {
    if (static_cast<int>(tensor.size()) == m) {
      partitions_of_rest();
      return;
    }
    for (int x = 1; x <= n; ++x) {
      if (used[static_cast<std::size_t>(x)]) continue;
      used[static_cast<std::size_t>(x)] = true;
      tensor.push_back(x);
      choose_tensor();
      tensor.pop_back();
      used[static_cast<std::size_t>(x)] = false;
    }
  };
  choose_tensor();
  std::sort(out.begin(), out.end());
  return out;
}

brauer::DiagramKey to_diagram(const WeightBasisElement& w) {
  brauer::DiagramKey key;
  for (const auto& g : w.monomial) key.blocks.push_back(brauer::BasisBlock{g.support, g.type, g.index});
  for (std::size_t j = 0; j < w.tensor.size(); ++j) key.matching.emplace_back(w.tensor[j], static_cast<int>(j) + 1);
  std::sort(key.matching.begin(), key.matching.end());
  std::sort(key.blocks.begin(), key.blocks.end());
  return key;
}

IsoReport diagram_weight_iso(const PartitionTuple& sigma, int n, int m) {
  const auto diagrams = brauer::hom_basis(sigma, n, m);
  const auto weights = weight_space_basis(sigma, n, m);
  IsoReport r;
  r.diagrams = diagrams.size();
  r.weight_elements = weights.size();
  r.injective = true;
  bool total = true;
  std::vector<bool> hit(diagrams.size(), false);
  for (const auto& w : weights) {
    const auto key = to_diagram(w);
    auto it = std::lower_bound(diagrams.begin(), diagrams.end(), key);
    if (it == diagrams.end() || !(*it == key)) {
      total = false;
      r.image.push_back(diagrams.size());
      continue;
    }
    const auto pos = static_cast<std::size_t>(it - diagrams.begin());
    if (hit[pos]) r.injective = false;
    hit[pos] = true;
    r.image.push_back(pos);
  }
  r.injective = r.injective && total;
  r.bijective = r.injective && r.diagrams == r.weight_elements;
  return r;
}

namespace {

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::vector<int> digits(std::size_t idx, int N, int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
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

// All permutations of the given position group, applied as position maps.
std::vector<std::vector<int>> group_perms(const std::vector<std::vector<int>>& groups, int n, bool signed_sum,
                                          std::vector<int>& signs) {
  std::vector<std::vector<int>> out{std::vector<int>(static_cast<std::size_t>(n))};
  for (int i = 0; i < n; ++i) out[0][static_cast<std::size_t>(i)] = i;
  signs = {1};
  for (const auto& g : groups) {
    std::vector<std::vector<int>> next;
    std::vector<int> next_signs;
    std::vector<int> p(g.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i);
    do {
      int inv = 0;
      for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b)
          if (p[a] > p[b]) ++inv;
      for (std::size_t k = 0; k < out.size(); ++k) {
        auto q = out[k];
        for (std::size_t i = 0; i < g.size(); ++i) q[static_cast<std::size_t>(g[i])] = out[k][static_cast<std::size_t>(g[static_cast<std::size_t>(p[i])])];
        next.push_back(std::move(q));
        next_signs.push_back(signs[k] * ((signed_sum && inv % 2) ? -1 : 1));
      }
    } while (std::next_permutation(p.begin(), p.end()));
    out = std::move(next);
    signs = std::move(next_signs);
  }
  return out;
}

}  // namespace

EvaluatedRep::EvaluatedRep(const Partition& lambda, int N) : lambda_(lambda), N_(N) {
  if (N < 0) throw PreconditionError("evaluate_rep: rank must be non-negative");
  const int n = lambda.size();
  const std::size_t total = ipow(static_cast<std::size_t>(N), n);
  if (N == 0) {
    basis_ = la::RatMat(total, n == 0 ? 1 : 0);
    if (n == 0) basis_(0, 0) = 1;
    return;
  }
  // positions of the row-filled tableau
  std::vector<std::vector<int>> rows;
  std::vector<std::vector<int>> cols(static_cast<std::size_t>(lambda[0]));
  int next = 0;
  for (int r = 0; r < lambda.length(); ++r) {
    rows.emplace_back();
    for (int c = 0; c < lambda[r]; ++c) {
      rows.back().push_back(next);
      cols[static_cast<std::size_t>(c)].push_back(next);
      ++next;
    }
  }
  std::vector<int> row_signs;
  std::vector<int> col_signs;
  const auto row_perms = group_perms(rows, n, false, row_signs);
  const auto col_perms = group_perms(cols, n, true, col_signs);
  // c_T e_w = sum_q sum_p sgn(q) e_{w o p o q}; collect distinct images
  std::map<std::vector<int>, bool> seen_sorted;
  std::vector<la::Vector> images;
  for (std::size_t idx = 0; idx < total; ++idx) {
    const auto w = digits(idx, N, n);
    // images of e_w depend only on the row-orbit of w
    std::vector<int> canon = w;
    for (const auto& row : rows) {
      std::vector<int> vals;
      for (int pos : row) vals.push_back(w[static_cast<std::size_t>(pos)]);
      std::sort(vals.begin(), vals.end());
      for (std::size_t i = 0; i < row.size(); ++i) canon[static_cast<std::size_t>(row[i])] = vals[i];
    }
    if (!seen_sorted.emplace(canon, true).second) continue;
    std::map<std::size_t, long> acc;
    for (const auto& p : row_perms) {
      std::vector<int> wp(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) wp[static_cast<std::size_t>(i)] = canon[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])];
      for (std::size_t k = 0; k < col_perms.size(); ++k) {
        std::vector<int> wq(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) wq[static_cast<std::size_t>(i)] = wp[static_cast<std::size_t>(col_perms[k][static_cast<std::size_t>(i)])];
        acc[index_of(wq, N)] += col_signs[k];
      }
    }
    la::Vector v(total);
    bool nonzero = false;
    for (auto [i, c] : acc)
      if (c != 0) {
        v[i] = c;
        nonzero = true;
      }
    if (nonzero) images.push_back(std::move(v));
  }
  la::RatMat span = la::RatMat::from_columns(total, images);
  basis_ = la::column_space(span);
  if (basis_.cols() != schur_dim(lambda, N))
    throw InternalError("evaluate_rep: image dimension differs from the hook-content formula");
}

la::RatMat EvaluatedRep::act(const la::RatMat& g) const {
  if (static_cast<int>(g.rows()) != N_ || static_cast<int>(g.cols()) != N_)
    throw PreconditionError("evaluate_rep: group element must be N x N");
  la::RatMat power = la::RatMat::identity(1);
  for (int i = 0; i < lambda_.size(); ++i) power = la::kronecker(power, g);
  const la::RatMat image = power * basis_;
  la::RatMat coords;
  if (!la::solve_columns(basis_, image, coords))
    throw InternalError("evaluate_rep: image is not GL-stable");
  return coords;
}

la::RatMat EvaluatedRep::elementary(int i, int j, const Rational& c) const {
  if (i == j || i < 0 || j < 0 || i >= N_ || j >= N_)
    throw PreconditionError("evaluate_rep: elementary matrix needs distinct indices below N");
  la::RatMat g = la::RatMat::identity(static_cast<std::size_t>(N_));
  g(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = c;
  return act(g);
}

}  // namespace sb::schurweyl
