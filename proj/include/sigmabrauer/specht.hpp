#pragma once

#include <map>
#include <memory>
#include <span>
#include <vector>

#include "sigmabrauer/characters.hpp"
#include "sigmabrauer/combinat.hpp"
#include "sigmabrauer/exactla.hpp"

namespace sb {

/// Young tableau with distinct entries 0..n-1, stored row by row.
using Tableau = std::vector<std::vector<int>>;

/// Permutation of {0..n-1} in one-line notation: perm[i] is the image of i.
using Permutation = std::vector<int>;

/// Specht module S^lambda over Q in the standard polytabloid basis. Entries of
/// tableaux are ranks 0..n-1; a module on an arbitrary ordered label set uses
/// the same basis with rank r standing for the r-th smallest label.
///
/// Basis order: standard tableaux sorted lexicographically by their row
/// reading word, so index 0 is the row-filled tableau.
///
/// The action is w . e_T = e_{w o T}. Generator k is the adjacent
/// transposition (k k+1).
class SpechtModule {
 public:
  /// Shared canonical module for a shape; construction is thread-safe.
  static std::shared_ptr<const SpechtModule> get(const Partition& shape);

  explicit SpechtModule(Partition shape);

  const Partition& shape() const { return shape_; }
  int degree() const { return shape_.size(); }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Tableau>& basis() const { return basis_; }
  /// Index of a standard tableau, or -1.
  int index_of(const Tableau& t) const;

  /// Matrix of the adjacent transposition (k k+1), k in [0, n-2].
  const la::RatMat& generator(int k) const { return generators_[static_cast<std::size_t>(k)]; }
  const std::vector<la::RatMat>& generators() const { return generators_; }

  /// Coordinates of the polytabloid e_t for an arbitrary tableau t of this
  /// shape, by column sorting and Garnir relations.
  la::Vector straighten(const Tableau& t) const;

  /// Action through a word in the adjacent transpositions.
  la::Vector act(const Permutation& w, std::span<const Rational> v) const;
  /// Matrix of w acting on the module.
  la::RatMat action_matrix(const Permutation& w) const;

  /// Gram matrix of the S_n-invariant form inherited from the tabloid module.
  const la::RatMat& gram() const { return gram_; }

 private:
  Partition shape_;
  std::vector<Tableau> basis_;
  std::map<std::vector<int>, int> index_;
  std::vector<la::RatMat> generators_;
  la::RatMat gram_;
};

/// Reduced word for w: applying generators in the returned order to a vector
/// realizes w.
std::vector<int> adjacent_word(const Permutation& w);

/// Label-level permutation: pairs (label, image). Unlisted labels are fixed.
using LabelMap = std::map<int, int>;

/// Element of S^lambda_A for a finite ordered label set A.
class SpechtVector {
 public:
  SpechtVector(const Partition& shape, std::vector<int> labels, la::Vector coords);
  /// Basis vector e_{T_index} on the given labels.
  static SpechtVector basis_vector(const Partition& shape, std::vector<int> labels, std::size_t index);

  const SpechtModule& module() const { return *module_; }
  const Partition& shape() const { return module_->shape(); }
  const std::vector<int>& labels() const { return labels_; }
  const la::Vector& coords() const { return coords_; }

  friend bool operator==(const SpechtVector& a, const SpechtVector& b) {
    return a.shape() == b.shape() && a.labels_ == b.labels_ && a.coords_ == b.coords_;
  }

 private:
  std::shared_ptr<const SpechtModule> module_;
  std::vector<int> labels_;  // sorted, distinct
  la::Vector coords_;
};

/// w must permute exactly the labels of v (fixed points allowed); throws
/// PreconditionError if some label is sent outside the set.
SpechtVector act(const LabelMap& w, const SpechtVector& v);

/// Transports v along the bijection f from its labels onto f(labels).
/// Throws PreconditionError unless f is injective and defined on every label.
SpechtVector relabel(const SpechtVector& v, const LabelMap& f);

/// Rank permutation of a bijection: given the images of the sorted source
/// labels, rank r goes to the rank of images[r] among all images.
Permutation induced_rank_permutation(std::span<const int> from_images);

/// Checks the Coxeter presentation of S_n on the given generator matrices.
bool satisfies_coxeter_relations(std::span<const la::RatMat> gens);

/// Representation of S_n given by the matrices of the adjacent transpositions.
struct SnRepresentation {
  int degree = 0;
  std::size_t dim = 0;
  std::vector<la::RatMat> generators;  // degree - 1 matrices, dim x dim
};

/// Projection onto the S^lambda-isotypic component:
///   P = dim(lambda)/n! * sum_g chi^lambda(g) rho(g).
/// Throws PreconditionError if |lambda| != n or the generators are not a
/// representation.
la::RatMat isotypic_projector(const Partition& lambda, const SnRepresentation& rep);

/// P * basis for the same projector, without materializing P.
la::RatMat isotypic_projector_on(const Partition& lambda, const SnRepresentation& rep,
                                 const la::RatMat& basis);

}  // namespace sb
