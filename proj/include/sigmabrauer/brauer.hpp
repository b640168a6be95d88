#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sigmabrauer/combinat.hpp"
#include "sigmabrauer/exactla.hpp"
#include "sigmabrauer/specht.hpp"

namespace sb::brauer {

/// Objects are finite sets {1..n}; labels are 1-based throughout.

/// Block with a standard polytabloid basis coefficient: (support, type, index).
struct BasisBlock {
  std::vector<int> support;  // sorted
  int type = 0;              // index into the tuple
  std::size_t index = 0;     // standard tableau index in S^{sigma_type}
  friend auto operator<=>(const BasisBlock&, const BasisBlock&) = default;
};

/// Basis diagram [n] -> [m]: blocks sorted by their smallest label, and the
/// matching as (source, target) pairs sorted by source.
struct DiagramKey {
  std::vector<std::pair<int, int>> matching;
  std::vector<BasisBlock> blocks;
  friend auto operator<=>(const DiagramKey&, const DiagramKey&) = default;
};

/// Block with an arbitrary Specht coefficient, as accepted on intake.
struct Block {
  std::vector<int> support;
  int type = 0;
  la::Vector coords;  // in the standard polytabloid basis of S^{sigma_type}
};

/// Linear combination of basis diagrams [source] -> [target] in the downwards
/// category. Zero terms are never stored.
class Morphism {
 public:
  Morphism(PartitionTuple sigma, int source, int target);

  static Morphism identity(const PartitionTuple& sigma, int n);
  /// Single basis diagram with coefficient 1; validated.
  static Morphism basis(const PartitionTuple& sigma, int source, int target, const DiagramKey& key);

  const PartitionTuple& sigma() const { return sigma_; }
  int source() const { return source_; }
  int target() const { return target_; }
  const std::map<DiagramKey, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds coef times a basis diagram after validating it.
  void add(const DiagramKey& key, const Rational& coef);
  /// Adds coef times a diagram whose block coefficients are arbitrary Specht
  /// vectors; expands multilinearly into basis diagrams.
  void add_diagram(const Rational& coef, const std::vector<std::pair<int, int>>& matching,
                   const std::vector<Block>& blocks);

  Morphism& operator+=(const Morphism& other);
  friend Morphism operator+(Morphism a, const Morphism& b) { return a += b; }
  friend Morphism operator*(const Rational& c, const Morphism& f);
  friend bool operator==(const Morphism&, const Morphism&) = default;

 private:
  void validate(const DiagramKey& key) const;
  void add_unchecked(const DiagramKey& key, const Rational& coef);

  PartitionTuple sigma_;
  int source_ = 0;
  int target_ = 0;
  std::map<DiagramKey, Rational> terms_;
};

/// g o f for f: S -> T and g: T -> U. Throws PreconditionError on a boundary
/// or tuple mismatch.
Morphism compose(const Morphism& g, const Morphism& f);

/// Disjoint union; the labels of g follow those of f on both sides.
Morphism tensor(const Morphism& f, const Morphism& g);

/// All basis diagrams [n] -> [m] in increasing DiagramKey order. Requires a
/// pure tuple.
std::vector<DiagramKey> hom_basis(const PartitionTuple& sigma, int n, int m);

/// Morphism in the upwards category, stored as the downwards morphism it is
/// opposite to: a morphism S -> T here is a downwards morphism T -> S.
class UpMorphism {
 public:
  explicit UpMorphism(Morphism down) : down_(std::move(down)) {}
  static UpMorphism identity(const PartitionTuple& sigma, int n) {
    return UpMorphism(Morphism::identity(sigma, n));
  }
  int source() const { return down_.target(); }
  int target() const { return down_.source(); }
  const Morphism& down() const { return down_; }
  friend bool operator==(const UpMorphism&, const UpMorphism&) = default;

 private:
  Morphism down_;
};

UpMorphism upwards_view(const Morphism& f);
Morphism downwards_view(const UpMorphism& f);
/// g o f in the upwards category.
UpMorphism compose(const UpMorphism& g, const UpMorphism& f);

/// JSON text form with "p/q" coefficients; see README for the schema.
std::string to_json(const Morphism& f);
/// Parses the JSON form; coords need not be basis vectors. Throws ParseError
/// on malformed input and PreconditionError on invalid diagrams.
Morphism from_json(const PartitionTuple& sigma, const std::string& text);

}  // namespace sb::brauer
