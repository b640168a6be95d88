#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sigmabrauer/brauer.hpp"
#include "sigmabrauer/exactla.hpp"
#include "sigmabrauer/modcat.hpp"

namespace sb::stabilizer {

/// Element of GL = union of GL_m, stored as its smallest m x m top-left block;
/// trailing identity rows and columns are trimmed on construction.
class GLElement {
 public:
  GLElement() = default;
  /// Throws PreconditionError unless mat is square and invertible.
  explicit GLElement(la::RatMat mat);
  static GLElement identity() { return GLElement(); }
  /// Block diagonal (1_j, a).
  static GLElement block(int j, const la::RatMat& a);

  int size() const { return static_cast<int>(mat_.rows()); }
  const la::RatMat& matrix() const { return mat_; }
  /// Top-left M x M block of the infinite extension; M >= size().
  la::RatMat extended(int M) const;

  friend GLElement operator*(const GLElement& a, const GLElement& b);
  friend bool operator==(const GLElement&, const GLElement&) = default;

 private:
  la::RatMat mat_;
};

/// g^{-1} omega restricted to k^n equals omega restricted to k^n: every block
/// functional agrees on words in [n]^k after substituting g. Throws
/// PreconditionError when omega's rank is below max(n, g.size()).
bool in_gamma(const modcat::FormPoint& omega, int n, const GLElement& g);

/// j = max(n, g.size()): for h in Gamma(j) and g in Gamma(n), hg lies in Gamma(n).
int gamma_product_level(const GLElement& g, int n);

/// Full stabilizer elements of omega among the permutation matrices of k^M.
std::vector<GLElement> permutation_symmetries(const modcat::FormPoint& omega);

struct AxiomReport {
  std::string axiom;  // "a", "b" or "c"
  std::size_t samples = 0;
  std::size_t passes = 0;
  std::vector<std::string> failures;
};

/// Checks the germinal-subgroup axioms on seeded samples: (a) the identity
/// lies in every Gamma(i); (b) Gamma(j) is contained in Gamma(i) for i <= j;
/// (c) Gamma(gamma_product_level(g, n)) g is contained in Gamma(n).
std::vector<AxiomReport> germinal_axiom_suite(const modcat::FormPoint& omega, const std::vector<int>& levels,
                                              std::size_t samples, std::uint64_t seed);

/// Random element of Gamma(j) at rank M: one of the given symmetries of omega
/// times block diag(1_j, A) with A an invertible integer matrix.
GLElement sample_gamma(int M, int j, const std::vector<GLElement>& symmetries, std::mt19937_64& rng);

/// phi is the R-linear map whose reduction at omega is theta(f). Checks
/// theta(f)(g.v) = g.theta(f)(v) for v in (k^n)^{(x)source}. Returns false when
/// the equality fails (in particular for g outside Gamma(n)); throws
/// PreconditionError when v is not supported on k^n, has the wrong length, or
/// the rank of omega is below max(n, g.size()).
bool gamma_linearity_check(const modcat::FormPoint& omega, const brauer::Morphism& f, int n, const GLElement& g,
                           const la::Vector& v);

}  // namespace sb::stabilizer
