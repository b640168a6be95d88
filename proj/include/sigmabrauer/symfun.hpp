#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "sigmabrauer/combinat.hpp"
#include "sigmabrauer/exactla.hpp"

namespace sb {

/// Finite Q-linear combination of Schur functions. Zero coefficients are
/// never stored.
class SchurExpr {
 public:
  using Terms = std::map<Partition, Rational>;

  SchurExpr() = default;
  static SchurExpr one() { return schur(Partition{}); }
  static SchurExpr schur(const Partition& lambda, const Rational& coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Partition& lambda) const;
  void add_term(const Partition& lambda, const Rational& coeff);

  /// Component of total degree d.
  SchurExpr degree_part(int d) const;
  int max_degree() const;
  bool has_nonnegative_integer_coefficients() const;

  /// "s[2,1] + 2*s[1]" style, terms in increasing partition order; "0" if zero.
  std::string str() const;

  SchurExpr& operator+=(const SchurExpr& other);
  SchurExpr& operator-=(const SchurExpr& other);
  friend SchurExpr operator+(SchurExpr a, const SchurExpr& b) { return a += b; }
  friend SchurExpr operator-(SchurExpr a, const SchurExpr& b) { return a -= b; }
  friend SchurExpr operator*(const Rational& c, const SchurExpr& a);
  /// Littlewood-Richardson product.
  friend SchurExpr operator*(const SchurExpr& a, const SchurExpr& b);
  friend bool operator==(const SchurExpr&, const SchurExpr&) = default;

 private:
  Terms terms_;
};

/// Littlewood-Richardson coefficient c^lambda_{mu,nu}.
std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// s_mu * s_nu expanded in the Schur basis by LR tableau enumeration.
SchurExpr lr_product(const Partition& mu, const Partition& nu);
SchurExpr lr_product(const SchurExpr& a, const SchurExpr& b);

/// Skew Schur function s_{lambda/mu}; zero unless mu is contained in lambda.
SchurExpr skew(const Partition& lambda, const Partition& mu);

/// Adams operation p_k[f].
SchurExpr adams(int k, const SchurExpr& f);

/// h_a[f] and e_i[f]. `inner` must have non-negative integer coefficients;
/// throws PreconditionError otherwise.
SchurExpr plethysm_h(int a, const SchurExpr& inner);
SchurExpr plethysm_e(int i, const SchurExpr& inner);

/// Degree-d character of Sym(k^{+sigma}) = prod_p sum_a h_a[s_{sigma_p}].
/// Throws PreconditionError unless sigma is pure.
SchurExpr sym_algebra_degree(const PartitionTuple& sigma, int d);

/// Hall inner product.
Rational inner_product(const SchurExpr& a, const SchurExpr& b);

/// Multiplicities of k^{+nu} in the shift Sh_n(k^{+lambda}):
/// sum_mu c^lambda_{mu,nu} * dim S_mu(k^n).
std::map<Partition, std::uint64_t> shift_decompose(const Partition& lambda, int n);

}  // namespace sb
