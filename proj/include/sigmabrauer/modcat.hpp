#pragma once

#include <cstdint>
#include <vector>

#include "sigmabrauer/brauer.hpp"
#include "sigmabrauer/combinat.hpp"
#include "sigmabrauer/exactla.hpp"
#include "sigmabrauer/specht.hpp"

namespace sb::modcat {

/// Words w in [N]^k (0-based letters) whose functionals Omega_{e_w} form the
/// coordinate basis of S_lambda(k^N)^*; chosen greedily in lexicographic
/// order. For lambda = (k) these are the weakly increasing words, so the
/// coordinates of a symmetric form are its polynomial coefficients.
const std::vector<std::vector<int>>& form_words(const Partition& lambda, int N);

/// A point of the space of sigma-forms on k^N: for each p a linear map
/// S_{sigma_p}(k^N) -> k, in the coordinates of form_words.
class FormPoint {
 public:
  FormPoint(int N, PartitionTuple sigma, std::vector<la::Vector> comps);

  /// Integer coordinates uniform in [-5, 5] from a seeded generator.
  static FormPoint random(int N, const PartitionTuple& sigma, std::uint64_t seed);
  /// Single symmetric form of degree k given by its polynomial coefficients
  /// on weakly increasing words (0-based).
  static FormPoint from_polynomial(int N, int k, const std::vector<std::pair<std::vector<int>, Rational>>& coeffs);

  int rank() const { return N_; }
  const PartitionTuple& sigma() const { return sigma_; }
  const std::vector<la::Vector>& comps() const { return comps_; }

  /// Row j is the functional on (k^N)^{(x)k} attached to the Specht basis
  /// vector e_{T_j} of S^{sigma_p}; words indexed with slot 1 most significant.
  const la::RatMat& block_functional(std::size_t p) const { return functionals_[p]; }

 private:
  int N_;
  PartitionTuple sigma_;
  std::vector<la::Vector> comps_;
  std::vector<la::RatMat> functionals_;
};

/// [K^{+lambda} : L_mu] = <s_lambda, s_mu * Sym^{|lambda|-|mu|}(k^{+sigma})>.
std::uint64_t multiplicity(const PartitionTuple& sigma, const Partition& lambda, const Partition& mu);

/// dim Ext^i(L_lambda, L_mu) = <s_mu, e_i[sum_p s_{sigma_p}] * s_lambda>.
std::uint64_t ext_dim(const PartitionTuple& sigma, int i, const Partition& lambda, const Partition& mu);

/// Matrix of theta(f): (k^N)^{(x)source} -> (k^N)^{(x)target}.
la::RatMat theta_apply(const FormPoint& omega, const brauer::Morphism& f);

/// Representation of S_n on (k^N)^{(x)n} by slot permutations.
SnRepresentation tensor_power_rep(int N, int n);

struct TracelessSpace {
  int rank = 0;
  int degree = 0;
  la::RatMat basis;                     // N^n x d
  std::vector<la::RatMat> generators;   // restricted S_n action, d x d
};

/// Intersection of the kernels of the contractions phi_{p,x,S}.
TracelessSpace traceless_space(const FormPoint& omega, int n);

/// Dimension of the S^lambda-isotypic piece of the traceless space of degree
/// |lambda|. Throws InternalError if the rank is not divisible by dim S^lambda.
std::size_t simple_realization_dim(const FormPoint& omega, const Partition& lambda);

/// Maps K^{+lambda} -> K^{+mu} with |mu| < |lambda|, given as the Hom-basis
/// diagrams [|lambda|] -> [|mu|]; composing with the isotypic projectors for
/// lambda and mu yields a spanning set.
struct InjectivePresentation {
  Partition lambda;
  std::vector<std::pair<Partition, std::vector<brauer::Morphism>>> lower_maps;
};

InjectivePresentation injective_presentation(const PartitionTuple& sigma, const Partition& lambda);

/// Compares the S^lambda-isotypic pieces of the traceless space and of the
/// joint kernel of theta over every lower map of the injective presentation.
bool socle_check(const FormPoint& omega, const Partition& lambda);

}  // namespace sb::modcat
