#include "sigmabrauer/combinat.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <sstream>

#include "sigmabrauer/errors.hpp"

namespace sb {

namespace {

constexpr const char* kEmptySymbol = "∅";

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::uint64_t to_u64(const mpz_class& z) {
  if (!z.fits_ulong_p()) throw InternalError("dimension does not fit in 64 bits");
  return z.get_ui();
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw PreconditionError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw PreconditionError("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase_if(parts, [](int p) { return p == 0; });
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty() || t == "0" || t == kEmptySymbol) return {};
  std::vector<int> parts;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty() || item.size() > 6 ||
        !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw ParseError("malformed partition '" + text + "'");
    parts.push_back(std::stoi(item));
  }
  if (!t.empty() && t.back() == ',') throw ParseError("malformed partition '" + text + "'");
  try {
    return Partition(std::move(parts));
  } catch (const PreconditionError& e) {
    throw ParseError("malformed partition '" + text + "': " + e.what());
  }
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (!parts_.empty()) {
    c.assign(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(c));
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 0; i < other.length(); ++i)
    if (other[i] > (*this)[i]) return false;
  return true;
}

std::string Partition::str() const {
  if (parts_.empty()) return kEmptySymbol;
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  return a.parts_ <=> b.parts_;
}

PartitionTuple PartitionTuple::parse(const std::string& text) {
  std::vector<Partition> entries;
  const std::string t = trim(text);
  if (t.empty()) return {};
  std::size_t start = 0;
  while (true) {
    const auto bar = t.find('|', start);
    entries.push_back(Partition::parse(t.substr(start, bar - start)));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return PartitionTuple(std::move(entries));
}

bool PartitionTuple::pure() const {
  return std::none_of(entries_.begin(), entries_.end(), [](const Partition& p) { return p.empty(); });
}

void PartitionTuple::require_pure() const {
  if (!pure()) throw PreconditionError("tuple '" + str() + "' contains the empty partition");
}

std::string PartitionTuple::str() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += '|';
    out += entries_[i].str();
  }
  return out;
}

Magnitude::Magnitude(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
}

std::strong_ordering operator<=>(const Magnitude& a, const Magnitude& b) {
  const std::size_t n = std::max(a.counts_.size(), b.counts_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

Magnitude magnitude(const PartitionTuple& t) {
  std::vector<std::uint64_t> counts;
  for (const auto& p : t.entries()) {
    const auto s = static_cast<std::size_t>(p.size());
    if (counts.size() <= s) counts.resize(s + 1, 0);
    ++counts[s];
  }
  return Magnitude(std::move(counts));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t specht_dim(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(lambda.size()));
  mpz_class hooks = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) hooks *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
  return to_u64(num / hooks);
}

std::uint64_t schur_dim(const Partition& lambda, int n) {
  if (n < 0) throw PreconditionError("schur_dim: rank must be non-negative");
  if (lambda.length() > n) return 0;
  const Partition conj = lambda.conjugate();
  mpz_class num = 1;
  mpz_class hooks = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      num *= n + j - i;
      hooks *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
    }
  return to_u64(num / hooks);
}

}  // namespace sb
