#include "sigmabrauer/specht.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <mutex>
#include <set>

#include "sigmabrauer/errors.hpp"

namespace sb {

namespace {

std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> w;
  for (const auto& row : t) w.insert(w.end(), row.begin(), row.end());
  return w;
}

std::vector<Tableau> standard_tableaux(const Partition& shape) {
  std::vector<Tableau> out;
  const int n = shape.size();
  Tableau t(static_cast<std::size_t>(shape.length()));
  std::function<void(int)> place = [&](int next) {
    if (next == n) {
      out.push_back(t);
      return;
    }
    for (int r = 0; r < shape.length(); ++r) {
      auto& row = t[static_cast<std::size_t>(r)];
      const auto len = static_cast<int>(row.size());
      if (len == shape[r]) continue;
      if (r > 0 && static_cast<int>(t[static_cast<std::size_t>(r - 1)].size()) <= len) continue;
      row.push_back(next);
      place(next + 1);
      row.pop_back();
    }
  };
  place(0);
  std::sort(out.begin(), out.end(),
            [](const Tableau& a, const Tableau& b) { return reading_word(a) < reading_word(b); });
  return out;
}

int permutation_sign(std::vector<int> p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    while (p[i] != static_cast<int>(i)) {
      std::swap(p[i], p[static_cast<std::size_t>(p[i])]);
      sign = -sign;
    }
  return sign;
}

// Sorts each column increasingly; returns the sign of the column permutation.
int sort_columns(Tableau& t) {
  int sign = 1;
  const std::size_t ncols = t.empty() ? 0 : t[0].size();
  for (std::size_t c = 0; c < ncols; ++c) {
    std::vector<int> col;
    for (const auto& row : t)
      if (c < row.size()) col.push_back(row[c]);
    std::vector<int> order(col.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return col[static_cast<std::size_t>(a)] < col[static_cast<std::size_t>(b)]; });
    sign *= permutation_sign(order);
    for (std::size_t r = 0; r < col.size(); ++r) t[r][c] = col[static_cast<std::size_t>(order[r])];
  }
  return sign;
}

using TabloidKey = std::vector<std::vector<int>>;

// e_T = sum over column permutations q of sgn(q) {qT}.
std::map<TabloidKey, int> tabloid_expansion(const Tableau& t) {
  std::map<TabloidKey, int> out;
  const std::size_t ncols = t.empty() ? 0 : t[0].size();
  std::vector<std::vector<int>> cols(ncols);
  for (const auto& row : t)
    for (std::size_t c = 0; c < row.size(); ++c) cols[c].push_back(row[c]);
  std::vector<std::vector<int>> perms(ncols);
  std::function<void(std::size_t, int)> rec = [&](std::size_t c, int sign) {
    if (c == ncols) {
      TabloidKey key(t.size());
      for (std::size_t cc = 0; cc < ncols; ++cc)
        for (std::size_t r = 0; r < cols[cc].size(); ++r)
          key[r].push_back(cols[cc][static_cast<std::size_t>(perms[cc][r])]);
      for (auto& row : key) std::sort(row.begin(), row.end());
      out[key] += sign;
      return;
    }
    std::vector<int> p(cols[c].size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i);
    do {
      perms[c] = p;
      rec(c + 1, sign * permutation_sign(p));
    } while (std::next_permutation(p.begin(), p.end()));
  };
  rec(0, 1);
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

class Straightener {
 public:
  explicit Straightener(const SpechtModule& m) : module_(m) {}

  la::Vector run(Tableau t, int depth = 0) {
    if (depth > 10000) throw InternalError("Garnir straightening did not terminate");
    const int sign = sort_columns(t);
    la::Vector out = straighten_sorted(t, depth);
    if (sign < 0)
      for (auto& x : out) x = -x;
    return out;
  }

 private:
  la::Vector straighten_sorted(const Tableau& t, int depth) {
    const auto key = reading_word(t);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    la::Vector out(module_.dim());
    // find a row descent t[i][j] > t[i][j+1]
    std::size_t di = t.size();
    std::size_t dj = 0;
    for (std::size_t j = 0; di == t.size() && !t.empty() && j + 1 < t[0].size(); ++j)
      for (std::size_t i = 0; i < t.size() && j + 1 < t[i].size(); ++i)
        if (t[i][j] > t[i][j + 1]) {
          di = i;
          dj = j;
          break;
        }
    if (di == t.size()) {
      const int idx = module_.index_of(t);
      if (idx < 0) throw InternalError("standard tableau missing from basis");
      out[static_cast<std::size_t>(idx)] = 1;
      memo_.emplace(key, out);
      return out;
    }
    // Garnir relation for A = column dj from row di down, B = column dj+1 down to row di.
    std::vector<std::pair<std::size_t, std::size_t>> pos;
    for (std::size_t i = di; i < t.size() && dj < t[i].size(); ++i) pos.emplace_back(i, dj);
    const std::size_t a_size = pos.size();
    for (std::size_t i = 0; i <= di; ++i) pos.emplace_back(i, dj + 1);
    std::vector<int> content;
    for (auto [r, c] : pos) content.push_back(t[r][c]);
    const std::size_t total = content.size();
    std::vector<bool> choose(total, false);
    std::fill(choose.begin(), choose.begin() + static_cast<long>(a_size), true);
    // iterate over all a_size-subsets of positions, taken as the A part
    std::sort(choose.begin(), choose.end());
    do {
      std::vector<int> picked_idx;
      std::vector<int> rest_idx;
      for (std::size_t k = 0; k < total; ++k) {
        if (choose[k]) {
          picked_idx.push_back(static_cast<int>(k));
        } else {
          rest_idx.push_back(static_cast<int>(k));
        }
      }
      bool identity = true;
      for (std::size_t k = 0; k < a_size; ++k)
        if (picked_idx[k] != static_cast<int>(k)) identity = false;
      if (identity) continue;
      auto by_content = [&](int x, int y) {
        return content[static_cast<std::size_t>(x)] < content[static_cast<std::size_t>(y)];
      };
      std::sort(picked_idx.begin(), picked_idx.end(), by_content);
      std::sort(rest_idx.begin(), rest_idx.end(), by_content);
      std::vector<int> p(picked_idx);
      p.insert(p.end(), rest_idx.begin(), rest_idx.end());
      Tableau u = t;
      for (std::size_t k = 0; k < total; ++k)
        u[pos[k].first][pos[k].second] = content[static_cast<std::size_t>(p[k])];
      const int sg = permutation_sign(p);
      const la::Vector sub = run(u, depth + 1);
      // e_t = - sum_{non-identity cosets} sgn(pi) e_{pi t}
      for (std::size_t k = 0; k < out.size(); ++k)
        if (sgn(sub[k]) != 0) out[k] += sg > 0 ? -sub[k] : sub[k];
    } while (std::next_permutation(choose.begin(), choose.end()));
    memo_.emplace(key, out);
    return out;
  }

  const SpechtModule& module_;
  std::map<std::vector<int>, la::Vector> memo_;
};

}  // namespace

std::shared_ptr<const SpechtModule> SpechtModule::get(const Partition& shape) {
  static std::mutex mutex;
  static std::map<Partition, std::shared_ptr<const SpechtModule>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(shape); it != cache.end()) return it->second;
  }
  auto module = std::make_shared<const SpechtModule>(shape);
  std::lock_guard lock(mutex);
  return cache.emplace(shape, std::move(module)).first->second;
}

SpechtModule::SpechtModule(Partition shape) : shape_(std::move(shape)) {
  basis_ = standard_tableaux(shape_);
  for (std::size_t i = 0; i < basis_.size(); ++i)
    index_.emplace(reading_word(basis_[i]), static_cast<int>(i));
  const std::size_t d = basis_.size();
  Straightener st(*this);
  for (int k = 0; k + 1 < degree(); ++k) {
    la::RatMat g(d, d);
    for (std::size_t b = 0; b < d; ++b) {
      Tableau t = basis_[b];
      for (auto& row : t)
        for (auto& x : row)
          if (x == k) x = k + 1;
          else if (x == k + 1) x = k;
      const la::Vector col = st.run(t);
      for (std::size_t r = 0; r < d; ++r) g(r, b) = col[r];
    }
    generators_.push_back(std::move(g));
  }
  std::vector<std::map<TabloidKey, int>> exp;
  for (const auto& t : basis_) exp.push_back(tabloid_expansion(t));
  gram_ = la::RatMat(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      long acc = 0;
      for (const auto& [key, c] : exp[i])
        if (auto it = exp[j].find(key); it != exp[j].end()) acc += static_cast<long>(c) * it->second;
      gram_(i, j) = acc;
    }
}

int SpechtModule::index_of(const Tableau& t) const {
  auto it = index_.find(reading_word(t));
  return it == index_.end() ? -1 : it->second;
}

la::Vector SpechtModule::straighten(const Tableau& t) const {
  if (static_cast<int>(t.size()) != shape_.length())
    throw PreconditionError("straighten: tableau shape mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(degree()), false);
  for (int r = 0; r < shape_.length(); ++r) {
    if (static_cast<int>(t[static_cast<std::size_t>(r)].size()) != shape_[r])
      throw PreconditionError("straighten: tableau shape mismatch");
    for (int x : t[static_cast<std::size_t>(r)]) {
      if (x < 0 || x >= degree() || seen[static_cast<std::size_t>(x)])
        throw PreconditionError("straighten: entries must be a permutation of 0..n-1");
      seen[static_cast<std::size_t>(x)] = true;
    }
  }
  Straightener st(*this);
  return st.run(t);
}

std::vector<int> adjacent_word(const Permutation& w) {
  Permutation p = w;
  std::vector<int> word;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (p[i] > p[i + 1]) {
        // p = (p o s_i) o s_i; the generator s_i acts first
        std::swap(p[i], p[i + 1]);
        word.push_back(static_cast<int>(i));
        changed = true;
      }
  }
  return word;
}

la::Vector SpechtModule::act(const Permutation& w, std::span<const Rational> v) const {
  if (static_cast<int>(w.size()) != degree()) throw PreconditionError("act: permutation size mismatch");
  if (v.size() != dim()) throw PreconditionError("act: vector length mismatch");
  la::Vector cur(v.begin(), v.end());
  for (int k : adjacent_word(w)) cur = generator(k).apply(cur);
  return cur;
}

la::RatMat SpechtModule::action_matrix(const Permutation& w) const {
  la::RatMat m = la::RatMat::identity(dim());
  for (int k : adjacent_word(w)) m = generator(k) * m;
  return m;
}

SpechtVector::SpechtVector(const Partition& shape, std::vector<int> labels, la::Vector coords)
    : module_(SpechtModule::get(shape)), labels_(std::move(labels)), coords_(std::move(coords)) {
  if (static_cast<int>(labels_.size()) != shape.size())
    throw PreconditionError("Specht vector: label count must equal |shape|");
  if (!std::is_sorted(labels_.begin(), labels_.end()) ||
      std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
    throw PreconditionError("Specht vector: labels must be sorted and distinct");
  if (coords_.size() != module_->dim())
    throw PreconditionError("Specht vector: coordinate count must equal the module dimension");
}

SpechtVector SpechtVector::basis_vector(const Partition& shape, std::vector<int> labels,
                                        std::size_t index) {
  la::Vector c(SpechtModule::get(shape)->dim());
  if (index >= c.size()) throw PreconditionError("Specht basis index out of range");
  c[index] = 1;
  return SpechtVector(shape, std::move(labels), std::move(c));
}

Permutation induced_rank_permutation(std::span<const int> images) {
  std::vector<int> sorted(images.begin(), images.end());
  std::sort(sorted.begin(), sorted.end());
  Permutation p(images.size());
  for (std::size_t r = 0; r < images.size(); ++r)
    p[r] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), images[r]) - sorted.begin());
  return p;
}

SpechtVector act(const LabelMap& w, const SpechtVector& v) {
  const auto& labels = v.labels();
  const std::set<int> lset(labels.begin(), labels.end());
  for (const auto& [from, to] : w) {
    if (from == to) continue;
    if (!lset.contains(from) || !lset.contains(to))
      throw PreconditionError("act: permutation moves labels outside the module's label set");
  }
  std::vector<int> images;
  for (int a : labels) {
    auto it = w.find(a);
    images.push_back(it == w.end() ? a : it->second);
  }
  if (std::set<int>(images.begin(), images.end()).size() != images.size())
    throw PreconditionError("act: map is not a permutation");
  const Permutation p = induced_rank_permutation(images);
  return SpechtVector(v.shape(), labels, v.module().act(p, v.coords()));
}

SpechtVector relabel(const SpechtVector& v, const LabelMap& f) {
  std::vector<int> images;
  for (int a : v.labels()) {
    auto it = f.find(a);
    if (it == f.end()) throw PreconditionError("relabel: map undefined on label " + std::to_string(a));
    images.push_back(it->second);
  }
  std::vector<int> target(images);
  std::sort(target.begin(), target.end());
  if (std::adjacent_find(target.begin(), target.end()) != target.end())
    throw PreconditionError("relabel: map is not injective");
  // f = (order-preserving A' -> f(A)) o (permutation of A); the permutation
  // part acts by generator words, the order-preserving part keeps coordinates
  const Permutation p = induced_rank_permutation(images);
  return SpechtVector(v.shape(), std::move(target), v.module().act(p, v.coords()));
}

bool satisfies_coxeter_relations(std::span<const la::RatMat> gens) {
  if (gens.empty()) return true;
  const std::size_t d = gens.front().rows();
  const la::RatMat id = la::RatMat::identity(d);
  for (const auto& g : gens)
    if (g.rows() != d || g.cols() != d) return false;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!(gens[i] * gens[i] == id)) return false;
    if (i + 1 < gens.size()) {
      const la::RatMat b = gens[i] * gens[i + 1];
      if (!(b * b * b == id)) return false;
    }
    for (std::size_t j = i + 2; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) return false;
  }
  return true;
}

namespace {

void validate_rep(const Partition& lambda, const SnRepresentation& rep) {
  if (lambda.size() != rep.degree)
    throw PreconditionError("isotypic projector: |lambda| must equal the degree n");
  if (rep.generators.size() != static_cast<std::size_t>(std::max(rep.degree - 1, 0)))
    throw PreconditionError("isotypic projector: expected n-1 generator matrices");
  for (const auto& g : rep.generators)
    if (g.rows() != rep.dim || g.cols() != rep.dim)
      throw PreconditionError("isotypic projector: generator shape mismatch");
  if (!satisfies_coxeter_relations(rep.generators))
    throw PreconditionError("isotypic projector: generators violate the Coxeter relations");
}

// sum_g chi^lambda(g) rho(g) * start, enumerating S_n breadth-first by
// rho(s_k g) = G_k rho(g).
la::RatMat character_sum(const Partition& lambda, const SnRepresentation& rep, const la::RatMat& start) {
  const int n = rep.degree;
  Permutation id(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i;
  std::map<Permutation, la::RatMat> images;
  std::deque<Permutation> queue{id};
  images.emplace(id, start);
  la::RatMat acc(start.rows(), start.cols());
  while (!queue.empty()) {
    const Permutation g = queue.front();
    queue.pop_front();
    const la::RatMat& cur = images.at(g);
    const long chi = sn_character(lambda, cycle_type(g));
    if (chi != 0) acc += Rational(chi) * cur;
    for (int k = 0; k + 1 < n; ++k) {
      Permutation h = g;
      for (auto& x : h)
        if (x == k) x = k + 1;
        else if (x == k + 1) x = k;
      if (images.contains(h)) continue;
      images.emplace(h, rep.generators[static_cast<std::size_t>(k)] * cur);
      queue.push_back(std::move(h));
    }
  }
  return acc;
}

}  // namespace

la::RatMat isotypic_projector(const Partition& lambda, const SnRepresentation& rep) {
  validate_rep(lambda, rep);
  Rational scale(static_cast<unsigned long>(specht_dim(lambda)),
                 static_cast<unsigned long>(factorial(rep.degree)));
  scale.canonicalize();
  return scale * character_sum(lambda, rep, la::RatMat::identity(rep.dim));
}

la::RatMat isotypic_projector_on(const Partition& lambda, const SnRepresentation& rep,
                                 const la::RatMat& basis) {
  validate_rep(lambda, rep);
  if (basis.rows() != rep.dim) throw PreconditionError("isotypic projector: basis row mismatch");
  Rational scale(static_cast<unsigned long>(specht_dim(lambda)),
                 static_cast<unsigned long>(factorial(rep.degree)));
  scale.canonicalize();
  return scale * character_sum(lambda, rep, basis);
}

}  // namespace sb
