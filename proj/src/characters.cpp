#include "sigmabrauer/characters.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "sigmabrauer/errors.hpp"

namespace sb {

namespace {

// Beta-set form: lambda_i + (len - 1 - i). Removing a rim hook of length r is
// moving one bead from b to b - r onto a free position; the sign is the parity
// of the number of beads jumped over.
long mn_beta(std::vector<int>& beta, const std::vector<int>& parts, std::size_t next) {
  if (next == parts.size()) return 1;
  const int r = parts[next];
  long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i];
    const int target = b - r;
    if (target < 0) continue;
    bool occupied = false;
    int between = 0;
    for (int x : beta) {
      if (x == target) occupied = true;
      if (x > target && x < b) ++between;
    }
    if (occupied) continue;
    beta[i] = target;
    const long sub = mn_beta(beta, parts, next + 1);
    beta[i] = b;
    total += (between % 2 == 0) ? sub : -sub;
  }
  return total;
}

std::mutex g_cache_mutex;
std::map<std::pair<Partition, Partition>, long> g_cache;

}  // namespace

long sn_character(const Partition& lambda, const Partition& cycle_type) {
  if (lambda.size() != cycle_type.size())
    throw PreconditionError("sn_character: |lambda| = " + std::to_string(lambda.size()) +
                            " differs from class size " + std::to_string(cycle_type.size()));
  auto key = std::make_pair(lambda, cycle_type);
  {
    std::lock_guard lock(g_cache_mutex);
    if (auto it = g_cache.find(key); it != g_cache.end()) return it->second;
  }
  const int len = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[i] + (len - 1 - i);
  const long value = mn_beta(beta, cycle_type.parts(), 0);
  std::lock_guard lock(g_cache_mutex);
  g_cache.emplace(std::move(key), value);
  return value;
}

Integer centralizer_order(const Partition& rho) {
  Integer z = 1;
  std::map<int, int> mult;
  for (int p : rho.parts()) ++mult[p];
  for (auto [part, m] : mult) {
    for (int i = 0; i < m; ++i) z *= part;
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
    z *= f;
  }
  return z;
}

Integer class_size(const Partition& rho) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(rho.size()));
  return f / centralizer_order(rho);
}

Partition cycle_type(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition::from_unsorted(std::move(lengths));
}

}  // namespace sb
