#include "sigmabrauer/symfun.hpp"

#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <utility>

#include "sigmabrauer/characters.hpp"
#include "sigmabrauer/errors.hpp"

namespace sb {

SchurExpr SchurExpr::schur(const Partition& lambda, const Rational& coeff) {
  SchurExpr e;
  e.add_term(lambda, coeff);
  return e;
}

Rational SchurExpr::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SchurExpr::add_term(const Partition& lambda, const Rational& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, coeff);
  if (inserted) return;
  it->second += coeff;
  if (sgn(it->second) == 0) terms_.erase(it);
}

SchurExpr SchurExpr::degree_part(int d) const {
  SchurExpr out;
  for (const auto& [lambda, c] : terms_)
    if (lambda.size() == d) out.terms_.emplace(lambda, c);
  return out;
}

int SchurExpr::max_degree() const {
  int d = -1;
  for (const auto& [lambda, c] : terms_) d = std::max(d, lambda.size());
  return d;
}

bool SchurExpr::has_nonnegative_integer_coefficients() const {
  for (const auto& [lambda, c] : terms_)
    if (sgn(c) < 0 || c.get_den() != 1) return false;
  return true;
}

std::string SchurExpr::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lambda, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << to_string(c) << "*";
    os << "s[" << (lambda.empty() ? std::string() : lambda.str()) << "]";
  }
  return os.str();
}

SchurExpr& SchurExpr::operator+=(const SchurExpr& other) {
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
  return *this;
}

SchurExpr& SchurExpr::operator-=(const SchurExpr& other) {
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, -c);
  return *this;
}

SchurExpr operator*(const Rational& c, const SchurExpr& a) {
  SchurExpr out;
  if (sgn(c) == 0) return out;
  for (const auto& [lambda, x] : a.terms_) out.terms_.emplace(lambda, c * x);
  return out;
}

SchurExpr operator*(const SchurExpr& a, const SchurExpr& b) { return lr_product(a, b); }

namespace {

// Enumerates LR tableaux of shape lambda/mu with content nu by adding, for each
// letter in turn, a horizontal strip whose reading word stays a lattice word.
// With `bound` set, shapes are confined to that partition.
class LrFiller {
 public:
  LrFiller(const Partition& mu, const Partition& nu, std::optional<Partition> bound)
      : nu_(nu), bound_(std::move(bound)) {
    shape_ = mu.parts();
  }

  template <class Visit>
  void run(Visit&& visit) {
    std::vector<int> none;
    letter(0, none, visit);
  }

 private:
  template <class Visit>
  void letter(int i, const std::vector<int>& prev_counts, Visit& visit) {
    if (i == nu_.length()) {
      visit(shape_);
      return;
    }
    const std::vector<int> old = shape_;
    std::vector<int> counts(old.size() + 1, 0);
    strip(i, 0, nu_[i], 0, 0, old, prev_counts, counts, visit);
    shape_ = old;
  }

  // Chooses how many copies of letter i go into row r.
  template <class Visit>
  void strip(int i, std::size_t r, int remaining, int cum_here, int cum_prev_above,
             const std::vector<int>& old, const std::vector<int>& prev_counts,
             std::vector<int>& counts, Visit& visit) {
    if (remaining == 0) {
      std::vector<int> saved = shape_;
      shape_ = old;
      shape_.resize(std::max(old.size(), r), 0);
      for (std::size_t k = 0; k < r; ++k) shape_[k] = (k < old.size() ? old[k] : 0) + counts[k];
      while (!shape_.empty() && shape_.back() == 0) shape_.pop_back();
      std::vector<int> next_prev(counts.begin(), counts.begin() + static_cast<long>(r));
      letter(i + 1, next_prev, visit);
      shape_ = std::move(saved);
      return;
    }
    if (r > old.size()) return;
    const int old_len = r < old.size() ? old[r] : 0;
    int cap = remaining;
    if (r > 0) cap = std::min(cap, old[r - 1] - old_len);
    if (bound_) cap = std::min(cap, (*bound_)[static_cast<int>(r)] - old_len);
    if (i > 0) {
      // copies of i read so far may not exceed copies of i-1 in rows above
      cap = std::min(cap, cum_prev_above - cum_here);
    }
    const int prev_here = r < prev_counts.size() ? prev_counts[r] : 0;
    for (int a = std::max(cap, 0); a >= 0; --a) {
      counts[r] = a;
      strip(i, r + 1, remaining - a, cum_here + a, cum_prev_above + prev_here, old, prev_counts,
            counts, visit);
    }
    counts[r] = 0;
  }

  Partition nu_;
  std::optional<Partition> bound_;
  std::vector<int> shape_;
};

std::mutex g_product_mutex;
std::map<std::pair<Partition, Partition>, SchurExpr> g_product_cache;

std::mutex g_adams_mutex;
std::map<std::pair<int, Partition>, SchurExpr> g_adams_cache;

void require_plethysm_inner(const SchurExpr& inner) {
  if (!inner.has_nonnegative_integer_coefficients())
    throw PreconditionError(
        "plethysm requires an inner expression with non-negative integer coefficients");
}

}  // namespace

std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu))
    return 0;
  std::uint64_t count = 0;
  LrFiller filler(mu, nu, lambda);
  filler.run([&](const std::vector<int>& shape) {
    if (shape == lambda.parts()) ++count;
  });
  return count;
}

SchurExpr lr_product(const Partition& mu, const Partition& nu) {
  auto key = std::make_pair(mu, nu);
  {
    std::lock_guard lock(g_product_mutex);
    if (auto it = g_product_cache.find(key); it != g_product_cache.end()) return it->second;
  }
  std::map<std::vector<int>, long> counts;
  LrFiller filler(mu, nu, std::nullopt);
  filler.run([&](const std::vector<int>& shape) { ++counts[shape]; });
  SchurExpr out;
  for (const auto& [shape, c] : counts) out.add_term(Partition(shape), Rational(c));
  std::lock_guard lock(g_product_mutex);
  g_product_cache.emplace(std::move(key), out);
  return out;
}

SchurExpr lr_product(const SchurExpr& a, const SchurExpr& b) {
  std::map<Partition, Rational> acc;
  for (const auto& [mu, x] : a.terms())
    for (const auto& [nu, y] : b.terms()) {
      const Rational xy = x * y;
      const SchurExpr prod = lr_product(mu, nu);
      for (const auto& [lambda, c] : prod.terms()) acc[lambda] += xy * c;
    }
  SchurExpr out;
  for (const auto& [lambda, c] : acc) out.add_term(lambda, c);
  return out;
}

SchurExpr skew(const Partition& lambda, const Partition& mu) {
  SchurExpr out;
  if (!lambda.contains(mu)) return out;
  for (const auto& nu : partitions_of(lambda.size() - mu.size())) {
    const auto c = lr_coefficient(lambda, mu, nu);
    if (c) out.add_term(nu, Rational(static_cast<unsigned long>(c)));
  }
  return out;
}

// p_k[s_mu] = sum_lambda (sum_tau chi^mu(tau) chi^lambda(k tau) / z_tau) s_lambda.
SchurExpr adams(int k, const SchurExpr& f) {
  if (k < 1) throw PreconditionError("adams: k must be positive");
  SchurExpr out;
  for (const auto& [mu, c] : f.terms()) {
    auto key = std::make_pair(k, mu);
    std::optional<SchurExpr> cached;
    {
      std::lock_guard lock(g_adams_mutex);
      if (auto it = g_adams_cache.find(key); it != g_adams_cache.end()) cached = it->second;
    }
    if (!cached) {
      SchurExpr term;
      const auto classes = partitions_of(mu.size());
      std::vector<std::pair<Partition, Rational>> weighted;
      for (const auto& tau : classes) {
        const long chi = sn_character(mu, tau);
        if (chi == 0) continue;
        std::vector<int> scaled = tau.parts();
        for (int& p : scaled) p *= k;
        weighted.emplace_back(Partition(scaled), Rational(chi) / Rational(centralizer_order(tau)));
      }
      for (const auto& lambda : partitions_of(k * mu.size())) {
        Rational coeff = 0;
        for (const auto& [ktau, w] : weighted) {
          const long chi = sn_character(lambda, ktau);
          if (chi != 0) coeff += w * chi;
        }
        term.add_term(lambda, coeff);
      }
      std::lock_guard lock(g_adams_mutex);
      cached = g_adams_cache.emplace(std::move(key), term).first->second;
    }
    out += c * *cached;
  }
  return out;
}

namespace {

// Newton's identities composed with f:
//   a h_a[f] = sum_k p_k[f] h_{a-k}[f],  a e_a[f] = sum_k (-1)^{k-1} p_k[f] e_{a-k}[f].
struct NewtonTable {
  std::vector<SchurExpr> powers;  // p_k[f] for k = 1..
  std::vector<SchurExpr> values;  // h_n[f] or e_n[f] for n = 0..
};

std::mutex g_newton_mutex;
std::map<std::pair<bool, SchurExpr::Terms>, NewtonTable> g_newton_cache;

SchurExpr newton_plethysm(int a, const SchurExpr& inner, bool alternating) {
  if (a < 0) throw PreconditionError("plethysm degree must be non-negative");
  require_plethysm_inner(inner);
  auto key = std::make_pair(alternating, inner.terms());
  NewtonTable table;
  {
    std::lock_guard lock(g_newton_mutex);
    if (auto it = g_newton_cache.find(key); it != g_newton_cache.end()) table = it->second;
  }
  if (table.values.empty()) table.values.push_back(SchurExpr::one());
  if (static_cast<int>(table.values.size()) > a) return table.values[static_cast<std::size_t>(a)];
  for (int k = static_cast<int>(table.powers.size()) + 1; k <= a; ++k)
    table.powers.push_back(adams(k, inner));
  for (int n = static_cast<int>(table.values.size()); n <= a; ++n) {
    SchurExpr acc;
    for (int k = 1; k <= n; ++k) {
      SchurExpr term = lr_product(table.powers[static_cast<std::size_t>(k - 1)],
                                  table.values[static_cast<std::size_t>(n - k)]);
      if (alternating && k % 2 == 0)
        acc -= term;
      else
        acc += term;
    }
    table.values.push_back(Rational(1, n) * acc);
  }
  SchurExpr result = table.values[static_cast<std::size_t>(a)];
  std::lock_guard lock(g_newton_mutex);
  auto& slot = g_newton_cache[key];
  if (slot.values.size() < table.values.size()) slot = std::move(table);
  return result;
}

}  // namespace

SchurExpr plethysm_h(int a, const SchurExpr& inner) { return newton_plethysm(a, inner, false); }

SchurExpr plethysm_e(int i, const SchurExpr& inner) { return newton_plethysm(i, inner, true); }

SchurExpr sym_algebra_degree(const PartitionTuple& sigma, int d) {
  sigma.require_pure();
  if (d < 0) throw PreconditionError("sym_algebra_degree: negative degree");
  // partial[e] = degree-e part of the product over the factors processed so far
  std::vector<SchurExpr> partial(static_cast<std::size_t>(d + 1));
  partial[0] = SchurExpr::one();
  for (const auto& part : sigma.entries()) {
    const int w = part.size();
    std::vector<SchurExpr> next(static_cast<std::size_t>(d + 1));
    const SchurExpr gen = SchurExpr::schur(part);
    for (int a = 0; a * w <= d; ++a) {
      const SchurExpr h = plethysm_h(a, gen);
      for (int e = 0; e + a * w <= d; ++e) {
        if (partial[static_cast<std::size_t>(e)].is_zero()) continue;
        next[static_cast<std::size_t>(e + a * w)] += lr_product(partial[static_cast<std::size_t>(e)], h);
      }
    }
    partial = std::move(next);
  }
  return partial[static_cast<std::size_t>(d)];
}

Rational inner_product(const SchurExpr& a, const SchurExpr& b) {
  Rational out = 0;
  for (const auto& [lambda, x] : a.terms()) {
    const Rational y = b.coefficient(lambda);
    if (sgn(y) != 0) out += x * y;
  }
  return out;
}

std::map<Partition, std::uint64_t> shift_decompose(const Partition& lambda, int n) {
  if (n < 0) throw PreconditionError("shift_decompose: n must be non-negative");
  std::map<Partition, std::uint64_t> out;
  for (int k = 0; k <= lambda.size(); ++k)
    for (const auto& mu : partitions_of(k)) {
      if (!lambda.contains(mu)) continue;
      const std::uint64_t dim = schur_dim(mu, n);
      if (dim == 0) continue;
      const SchurExpr sk = skew(lambda, mu);
      for (const auto& [nu, c] : sk.terms())
        out[nu] += dim * c.get_num().get_ui();
    }
  return out;
}

}  // namespace sb
