#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sb {

using Rational = mpq_class;
using Integer = mpz_class;

/// Formats a rational as "p/q" (or "p" when q == 1).
std::string to_string(const Rational& q);
/// Parses "p", "-p" or "p/q"; throws ParseError.
Rational parse_rational(const std::string& text);

namespace la {

/// Dense exact rational matrix, row-major. Entries are kept canonical
/// (lowest terms) by GMP.
class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols);
  RatMat(std::initializer_list<std::initializer_list<Rational>> init);

  static RatMat identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static RatMat from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<Rational> column(std::size_t c) const;

  RatMat transpose() const;
  bool is_zero() const;
  std::size_t nonzeros() const;

  friend bool operator==(const RatMat& a, const RatMat& b);
  friend RatMat operator+(const RatMat& a, const RatMat& b);
  friend RatMat operator-(const RatMat& a, const RatMat& b);
  friend RatMat operator*(const RatMat& a, const RatMat& b);
  friend RatMat operator*(const Rational& s, const RatMat& a);
  RatMat& operator+=(const RatMat& b);

  std::vector<Rational> apply(std::span<const Rational> v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

using Vector = std::vector<Rational>;

/// Kronecker product; the left factor indexes the most significant digit.
RatMat kronecker(const RatMat& a, const RatMat& b);
/// Vertical concatenation; all blocks must share the column count.
RatMat vstack(std::span<const RatMat> blocks);
/// Horizontal concatenation; all blocks must share the row count.
RatMat hstack(std::span<const RatMat> blocks);

/// Reduced row echelon form computed by fraction-free elimination.
struct Echelon {
  RatMat rref;                       // rank rows, normalized pivots
  std::vector<std::size_t> pivots;   // pivot column per row
};
Echelon echelon(const RatMat& m);

std::size_t rank(const RatMat& m);

/// Basis of the right null space, one vector per free column.
std::vector<Vector> kernel_basis(const RatMat& m);

/// Basis of the intersection of the right null spaces. With an empty list the
/// whole space of dimension `cols` is returned.
std::vector<Vector> intersect_kernels(std::span<const RatMat> ms, std::size_t cols);

/// Columns of the returned matrix are the pivot columns of m, a basis of its
/// column space.
RatMat column_space(const RatMat& m);

/// Solves basis * X = rhs where basis has independent columns. Returns false
/// if some column of rhs is outside the span.
bool solve_columns(const RatMat& basis, const RatMat& rhs, RatMat& out);

/// Solves basis * x = v for x where basis has independent columns.
/// Returns false if v is not in the column span.
bool solve_in_span(const RatMat& basis, std::span<const Rational> v, Vector& x);

/// True iff the column spans of a and b coincide.
bool same_column_space(const RatMat& a, const RatMat& b);

}  // namespace la
}  // namespace sb
