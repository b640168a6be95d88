#include "sigmabrauer/brauer.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include <json.hpp>

#include "sigmabrauer/errors.hpp"

namespace sb::brauer {

namespace {

std::size_t type_dim(const PartitionTuple& sigma, int type) {
  return SpechtModule::get(sigma[static_cast<std::size_t>(type)])->dim();
}

void sort_key(DiagramKey& key) {
  std::sort(key.matching.begin(), key.matching.end());
  std::sort(key.blocks.begin(), key.blocks.end());
}

// Expands blocks with arbitrary coordinates multilinearly on top of `base`,
// calling emit(key, coefficient) for every nonzero basis combination.
void expand(const DiagramKey& base, const Rational& coef,
            const std::vector<std::pair<BasisBlock, const la::Vector*>>& open,
            const std::function<void(const DiagramKey&, const Rational&)>& emit) {
  DiagramKey key = base;
  const std::size_t fixed = key.blocks.size();
  key.blocks.resize(fixed + open.size());
  std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t i, const Rational& c) {
    if (i == open.size()) {
      DiagramKey out = key;
      sort_key(out);
      emit(out, c);
      return;
    }
    const auto& [blk, coords] = open[i];
    for (std::size_t idx = 0; idx < coords->size(); ++idx) {
      const Rational& x = (*coords)[idx];
      if (sgn(x) == 0) continue;
      key.blocks[fixed + i] = BasisBlock{blk.support, blk.type, idx};
      rec(i + 1, c * x);
    }
  };
  rec(0, coef);
}

}  // namespace

Morphism::Morphism(PartitionTuple sigma, int source, int target)
    : sigma_(std::move(sigma)), source_(source), target_(target) {
  if (source < 0 || target < 0) throw PreconditionError("morphism: object sizes must be non-negative");
  sigma_.require_pure();
}

Morphism Morphism::identity(const PartitionTuple& sigma, int n) {
  Morphism f(sigma, n, n);
  DiagramKey key;
  for (int i = 1; i <= n; ++i) key.matching.emplace_back(i, i);
  f.terms_.emplace(std::move(key), Rational(1));
  return f;
}

Morphism Morphism::basis(const PartitionTuple& sigma, int source, int target, const DiagramKey& key) {
  Morphism f(sigma, source, target);
  f.add(key, Rational(1));
  return f;
}

void Morphism::validate(const DiagramKey& key) const {
  std::vector<int> used(static_cast<std::size_t>(source_) + 1, 0);
  auto claim = [&](int s) {
    if (s < 1 || s > source_) throw PreconditionError("diagram: source label " + std::to_string(s) + " out of range");
    if (used[static_cast<std::size_t>(s)]++) throw PreconditionError("diagram: source label " + std::to_string(s) + " used twice");
  };
  if (static_cast<int>(key.matching.size()) != target_)
    throw PreconditionError("diagram: matching must be a bijection onto the target");
  std::vector<bool> hit(static_cast<std::size_t>(target_) + 1, false);
  for (std::size_t i = 0; i < key.matching.size(); ++i) {
    const auto [s, t] = key.matching[i];
    if (i > 0 && key.matching[i - 1].first >= s) throw PreconditionError("diagram: matching not sorted by source");
    claim(s);
    if (t < 1 || t > target_ || hit[static_cast<std::size_t>(t)])
      throw PreconditionError("diagram: matching must be a bijection onto the target");
    hit[static_cast<std::size_t>(t)] = true;
  }
  for (std::size_t i = 0; i < key.blocks.size(); ++i) {
    const auto& b = key.blocks[i];
    if (b.type < 0 || static_cast<std::size_t>(b.type) >= sigma_.size())
      throw PreconditionError("diagram: block type out of range");
    const Partition& shape = sigma_[static_cast<std::size_t>(b.type)];
    if (static_cast<int>(b.support.size()) != shape.size())
      throw PreconditionError("diagram: block support size must equal |sigma_p|");
    if (!std::is_sorted(b.support.begin(), b.support.end()))
      throw PreconditionError("diagram: block support must be sorted");
    if (i > 0 && !(key.blocks[i - 1] < b)) throw PreconditionError("diagram: blocks not in normal order");
    if (b.index >= type_dim(sigma_, b.type)) throw PreconditionError("diagram: Specht index out of range");
    for (int s : b.support) claim(s);
  }
  for (int s = 1; s <= source_; ++s)
    if (!used[static_cast<std::size_t>(s)]) throw PreconditionError("diagram: source label " + std::to_string(s) + " unused");
}

void Morphism::add_unchecked(const DiagramKey& key, const Rational& coef) {
  if (sgn(coef) == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, coef);
  if (!inserted) {
    it->second += coef;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void Morphism::add(const DiagramKey& key, const Rational& coef) {
  validate(key);
  add_unchecked(key, coef);
}

void Morphism::add_diagram(const Rational& coef, const std::vector<std::pair<int, int>>& matching,
                           const std::vector<Block>& blocks) {
  DiagramKey base;
  base.matching = matching;
  std::sort(base.matching.begin(), base.matching.end());
  std::vector<std::pair<BasisBlock, const la::Vector*>> open;
  std::vector<la::Vector> storage(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Block& b = blocks[i];
    if (b.type < 0 || static_cast<std::size_t>(b.type) >= sigma_.size())
      throw PreconditionError("diagram: block type out of range");
    if (b.coords.size() != type_dim(sigma_, b.type))
      throw PreconditionError("diagram: block coordinate count must equal dim S^{sigma_p}");
    if (std::all_of(b.coords.begin(), b.coords.end(), [](const Rational& x) { return sgn(x) == 0; }))
      throw PreconditionError("diagram: block coefficient must be nonzero");
    BasisBlock bb{b.support, b.type, 0};
    std::sort(bb.support.begin(), bb.support.end());
    storage[i] = b.coords;
    open.emplace_back(std::move(bb), &storage[i]);
  }
  std::vector<std::pair<DiagramKey, Rational>> pending;
  expand(base, coef, open, [&](const DiagramKey& k, const Rational& c) { pending.emplace_back(k, c); });
  // validate the shape once even when every expanded term cancels
  if (pending.empty() && !open.empty()) {
    DiagramKey probe = base;
    for (const auto& [bb, _] : open) probe.blocks.push_back(bb);
    sort_key(probe);
    validate(probe);
  }
  for (const auto& [k, c] : pending) add(k, c);
}

Morphism& Morphism::operator+=(const Morphism& other) {
  if (sigma_ != other.sigma_ || source_ != other.source_ || target_ != other.target_)
    throw PreconditionError("morphism sum: mismatched hom spaces");
  for (const auto& [k, c] : other.terms_) add_unchecked(k, c);
  return *this;
}

Morphism operator*(const Rational& c, const Morphism& f) {
  Morphism out(f.sigma_, f.source_, f.target_);
  if (sgn(c) == 0) return out;
  for (const auto& [k, x] : f.terms_) out.terms_.emplace(k, c * x);
  return out;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (f.sigma() != g.sigma()) throw PreconditionError("compose: tuple mismatch");
  if (f.target() != g.source())
    throw PreconditionError("compose: target " + std::to_string(f.target()) + " differs from source " +
                            std::to_string(g.source()));
  Morphism out(f.sigma(), f.source(), g.target());
  const auto& sigma = f.sigma();
  for (const auto& [kf, cf] : f.terms()) {
    std::vector<int> inv(static_cast<std::size_t>(f.target()) + 1, 0);
    for (auto [s, t] : kf.matching) inv[static_cast<std::size_t>(t)] = s;
    for (const auto& [kg, cg] : g.terms()) {
      DiagramKey base;
      base.blocks = kf.blocks;
      for (auto [t, u] : kg.matching) base.matching.emplace_back(inv[static_cast<std::size_t>(t)], u);
      std::vector<la::Vector> storage;
      storage.reserve(kg.blocks.size());
      std::vector<std::pair<BasisBlock, const la::Vector*>> open;
      for (const auto& b : kg.blocks) {
        LabelMap back;
        for (int t : b.support) back.emplace(t, inv[static_cast<std::size_t>(t)]);
        const Partition& shape = sigma[static_cast<std::size_t>(b.type)];
        const SpechtVector moved = relabel(SpechtVector::basis_vector(shape, b.support, b.index), back);
        storage.push_back(moved.coords());
        open.emplace_back(BasisBlock{moved.labels(), b.type, 0}, &storage.back());
      }
      expand(base, cf * cg, open, [&](const DiagramKey& k, const Rational& c) { out.add(k, c); });
    }
  }
  return out;
}

Morphism tensor(const Morphism& f, const Morphism& g) {
  if (f.sigma() != g.sigma()) throw PreconditionError("tensor: tuple mismatch");
  Morphism out(f.sigma(), f.source() + g.source(), f.target() + g.target());
  const int ds = f.source();
  const int dt = f.target();
  for (const auto& [kf, cf] : f.terms())
    for (const auto& [kg, cg] : g.terms()) {
      DiagramKey key = kf;
      for (auto [s, t] : kg.matching) key.matching.emplace_back(s + ds, t + dt);
      for (auto b : kg.blocks) {
        for (int& s : b.support) s += ds;
        key.blocks.push_back(std::move(b));
      }
      sort_key(key);
      out.add(key, cf * cg);
    }
  return out;
}

std::vector<DiagramKey> hom_basis(const PartitionTuple& sigma, int n, int m) {
  sigma.require_pure();
  if (n < 0 || m < 0) throw PreconditionError("hom_basis: sizes must be non-negative");
  std::vector<DiagramKey> out;
  if (m > n) return out;
  std::vector<bool> taken(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> free_labels;
  std::vector<BasisBlock> blocks;

  auto emit_bijections = [&]() {
    std::vector<int> targets(static_cast<std::size_t>(m));
    std::iota(targets.begin(), targets.end(), 1);
    do {
      DiagramKey key;
      for (std::size_t i = 0; i < free_labels.size(); ++i) key.matching.emplace_back(free_labels[i], targets[i]);
      key.blocks = blocks;
      sort_key(key);
      out.push_back(std::move(key));
    } while (std::next_permutation(targets.begin(), targets.end()));
  };

  std::function<void(int)> rec = [&](int label) {
    while (label <= n && taken[static_cast<std::size_t>(label)]) ++label;
    if (label > n) {
      if (static_cast<int>(free_labels.size()) == m) emit_bijections();
      return;
    }
    taken[static_cast<std::size_t>(label)] = true;
    if (static_cast<int>(free_labels.size()) < m) {
      free_labels.push_back(label);
      rec(label + 1);
      free_labels.pop_back();
    }
    for (std::size_t p = 0; p < sigma.size(); ++p) {
      const int size = sigma[p].size();
      const std::size_t dim = type_dim(sigma, static_cast<int>(p));
      std::vector<int> support{label};
      std::function<void(int)> partners = [&](int from) {
        if (static_cast<int>(support.size()) == size) {
          for (std::size_t idx = 0; idx < dim; ++idx) {
            blocks.push_back(BasisBlock{support, static_cast<int>(p), idx});
            rec(label + 1);
            blocks.pop_back();
          }
          return;
        }
        for (int x = from; x <= n; ++x) {
          if (taken[static_cast<std::size_t>(x)]) continue;
          taken[static_cast<std::size_t>(x)] = true;
          support.push_back(x);
          partners(x + 1);
          support.pop_back();
          taken[static_cast<std::size_t>(x)] = false;
        }
      };
      partners(label + 1);
    }
    taken[static_cast<std::size_t>(label)] = false;
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

UpMorphism upwards_view(const Morphism& f) { return UpMorphism(f); }
Morphism downwards_view(const UpMorphism& f) { return f.down(); }

UpMorphism compose(const UpMorphism& g, const UpMorphism& f) {
  return UpMorphism(compose(f.down(), g.down()));
}

std::string to_json(const Morphism& f) {
  nlohmann::ordered_json doc;
  doc["source_size"] = f.source();
  doc["target_size"] = f.target();
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [k, c] : f.terms()) {
    nlohmann::ordered_json t;
    t["coef"] = to_string(c);
    auto matching = nlohmann::ordered_json::array();
    for (auto [s, u] : k.matching) matching.push_back({s, u});
    t["matching"] = matching;
    auto blocks = nlohmann::ordered_json::array();
    for (const auto& b : k.blocks) {
      nlohmann::ordered_json jb;
      jb["support"] = b.support;
      jb["type"] = b.type;
      auto coords = nlohmann::ordered_json::array();
      const std::size_t dim = type_dim(f.sigma(), b.type);
      for (std::size_t i = 0; i < dim; ++i) coords.push_back(i == b.index ? "1" : "0");
      jb["coords"] = coords;
      blocks.push_back(jb);
    }
    t["blocks"] = blocks;
    terms.push_back(t);
  }
  doc["terms"] = terms;
  return doc.dump();
}

Morphism from_json(const PartitionTuple& sigma, const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("morphism JSON: ") + e.what());
  }
  auto rational_of = [](const nlohmann::json& v) -> Rational {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw ParseError("morphism JSON: rationals must be \"p/q\" strings or integers");
  };
  try {
    Morphism f(sigma, doc.at("source_size").get<int>(), doc.at("target_size").get<int>());
    for (const auto& t : doc.at("terms")) {
      std::vector<std::pair<int, int>> matching;
      for (const auto& pair : t.at("matching")) {
        if (!pair.is_array() || pair.size() != 2) throw ParseError("morphism JSON: matching entries are [s, t] pairs");
        matching.emplace_back(pair[0].get<int>(), pair[1].get<int>());
      }
      std::vector<Block> blocks;
      for (const auto& jb : t.at("blocks")) {
        Block b;
        b.support = jb.at("support").get<std::vector<int>>();
        b.type = jb.at("type").get<int>();
        for (const auto& x : jb.at("coords")) b.coords.push_back(rational_of(x));
        blocks.push_back(std::move(b));
      }
      f.add_diagram(rational_of(t.at("coef")), matching, blocks);
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("morphism JSON: ") + e.what());
  }
}

}  // namespace sb::brauer
