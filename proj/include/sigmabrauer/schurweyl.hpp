#pragma once

#include <vector>

#include "sigmabrauer/brauer.hpp"
#include "sigmabrauer/combinat.hpp"
#include "sigmabrauer/exactla.hpp"

namespace sb::schurweyl {

/// Generator t_{A,p,x} of the free algebra on k^{+sigma}, with x a standard
/// polytabloid basis vector of S^{sigma_p}_A.
struct Generator {
  std::vector<int> support;  // sorted
  int type = 0;
  std::size_t index = 0;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// Monomial T times e_{s_1} (x) ... (x) e_{s_m}; the supports of T and the
/// labels s_j partition [n].
struct WeightBasisElement {
  std::vector<Generator> monomial;  // sorted
  std::vector<int> tensor;          // s_1..s_m, distinct
  friend auto operator<=>(const WeightBasisElement&, const WeightBasisElement&) = default;
};

/// Basis of the weight space (R (x) V^{(x)m})_{1^n}, R = Sym(k^{+sigma}).
std::vector<WeightBasisElement> weight_space_basis(const PartitionTuple& sigma, int n, int m);

/// Diagram attached to a weight basis element: generators become blocks and
/// s_j is matched to j.
brauer::DiagramKey to_diagram(const WeightBasisElement& w);

struct IsoReport {
  std::size_t diagrams = 0;
  std::size_t weight_elements = 0;
  bool injective = false;
  bool bijective = false;
  /// image[i] is the position in hom_basis of the diagram of weight element i.
  std::vector<std::size_t> image;
};

/// Pairs the two enumerations through to_diagram and checks bijectivity.
IsoReport diagram_weight_iso(const PartitionTuple& sigma, int n, int m);

/// S_lambda(k^N) realized as the image of the Young symmetrizer of the
/// row-filled tableau inside (k^N)^{(x)n}.
class EvaluatedRep {
 public:
  EvaluatedRep(const Partition& lambda, int N);
  const Partition& lambda() const { return lambda_; }
  int rank() const { return N_; }
  std::size_t dim() const { return basis_.cols(); }
  /// Columns span the image inside (k^N)^{(x)n}.
  const la::RatMat& basis() const { return basis_; }
  /// Matrix of g in GL_N on the chosen basis. Throws PreconditionError unless
  /// g is N x N.
  la::RatMat act(const la::RatMat& g) const;
  /// Action of the elementary matrix 1 + c E_{ij} (0-based i != j).
  la::RatMat elementary(int i, int j, const Rational& c) const;

 private:
  Partition lambda_;
  int N_;
  la::RatMat basis_;
};

}  // namespace sb::schurweyl
