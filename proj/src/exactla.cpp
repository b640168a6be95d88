#include "sigmabrauer/exactla.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "sigmabrauer/errors.hpp"

namespace sb {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  auto valid_int = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw ParseError("malformed rational literal '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  const Integer d{den};
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  Rational q{Integer{num}, d};
  q.canonicalize();
  return q;
}

namespace la {

RatMat::RatMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMat::RatMat(std::initializer_list<std::initializer_list<Rational>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : init) {
    if (r.size() != cols_) throw PreconditionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMat RatMat::from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& cols) {
  RatMat m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw PreconditionError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

std::vector<Rational> RatMat::column(std::size_t c) const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RatMat RatMat::transpose() const {
  RatMat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RatMat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

std::size_t RatMat::nonzeros() const {
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) != 0; }));
}

bool operator==(const RatMat& a, const RatMat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RatMat operator+(const RatMat& a, const RatMat& b) {
  RatMat out = a;
  out += b;
  return out;
}

RatMat& RatMat::operator+=(const RatMat& b) {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw PreconditionError("matrix shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (sgn(b.data_[i]) != 0) data_[i] += b.data_[i];
  return *this;
}

RatMat operator-(const RatMat& a, const RatMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw PreconditionError("matrix shape mismatch in -");
  RatMat out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

// Zero entries of the left operand are skipped, which makes products with
// permutation-like and block-sparse matrices cheap.
RatMat operator*(const RatMat& a, const RatMat& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("matrix shape mismatch in *");
  RatMat out(a.rows_, b.cols_);
  Rational tmp;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    Rational* orow = out.data_.data() + i * out.cols_;
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      const Rational* brow = b.data_.data() + k * b.cols_;
      const bool unit = aik == 1;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (sgn(brow[j]) == 0) continue;
        if (unit) {
          orow[j] += brow[j];
        } else {
          tmp = aik * brow[j];
          orow[j] += tmp;
        }
      }
    }
  }
  return out;
}

RatMat operator*(const Rational& s, const RatMat& a) {
  RatMat out = a;
  for (auto& x : out.data_) x *= s;
  return out;
}

std::vector<Rational> RatMat::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw PreconditionError("vector length mismatch in apply");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& x = (*this)(r, c);
      if (sgn(x) != 0 && sgn(v[c]) != 0) out[r] += x * v[c];
    }
  return out;
}

RatMat kronecker(const RatMat& a, const RatMat& b) {
  RatMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& x = a(i, j);
      if (sgn(x) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (sgn(b(k, l)) != 0) out(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  return out;
}

RatMat vstack(std::span<const RatMat> blocks) {
  if (blocks.empty()) return {};
  const std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw PreconditionError("vstack: mismatched column counts");
    rows += b.rows();
  }
  RatMat out(rows, cols);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < cols; ++c) out(r0 + r, c) = b(r, c);
    r0 += b.rows();
  }
  return out;
}

RatMat hstack(std::span<const RatMat> blocks) {
  if (blocks.empty()) return {};
  const std::size_t rows = blocks.front().rows();
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw PreconditionError("hstack: mismatched row counts");
    cols += b.cols();
  }
  RatMat out(rows, cols);
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c0 + c) = b(r, c);
    c0 += b.cols();
  }
  return out;
}

namespace {

// Clears denominators row by row; row scaling leaves the row space unchanged.
std::vector<std::vector<Integer>> integer_rows(const RatMat& m) {
  std::vector<std::vector<Integer>> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    bool nonzero = false;
    for (const auto& q : m.row(r)) {
      if (sgn(q) == 0) continue;
      nonzero = true;
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
    if (!nonzero) continue;
    std::vector<Integer> row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& q = m(r, c);
      if (sgn(q) == 0) continue;
      row[c] = q.get_num() * (l / q.get_den());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Echelon echelon(const RatMat& m) {
  auto a = integer_rows(m);
  const std::size_t cols = m.cols();
  const std::size_t nrows = a.size();
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  Integer t1;
  Integer t2;
  std::size_t k = 0;
  // One-step Bareiss elimination on the integer rows. Every intermediate
  // entry is a minor of the input, so the division by `prev` is exact.
  for (std::size_t c = 0; c < cols && k < nrows; ++c) {
    std::size_t piv = nrows;
    std::size_t best_size = 0;
    for (std::size_t i = k; i < nrows; ++i) {
      if (sgn(a[i][c]) == 0) continue;
      const std::size_t sz = mpz_sizeinbase(a[i][c].get_mpz_t(), 2);
      if (piv == nrows || sz < best_size) {
        piv = i;
        best_size = sz;
      }
    }
    if (piv == nrows) continue;
    std::swap(a[k], a[piv]);
    const Integer& p = a[k][c];
    for (std::size_t i = k + 1; i < nrows; ++i) {
      auto& row = a[i];
      if (sgn(row[c]) == 0) {
        if (prev != 1 || p != 1) {
          for (std::size_t j = c + 1; j < cols; ++j) {
            if (sgn(row[j]) == 0) continue;
            t1 = row[j] * p;
            mpz_divexact(row[j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
          }
        }
        continue;
      }
      const Integer f = row[c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        const bool rz = sgn(row[j]) == 0;
        const bool kz = sgn(a[k][j]) == 0;
        if (rz && kz) continue;
        t1 = rz ? Integer(0) : Integer(row[j] * p);
        if (!kz) {
          t2 = f * a[k][j];
          t1 -= t2;
        }
        mpz_divexact(row[j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      row[c] = 0;
    }
    prev = p;
    pivots.push_back(c);
    ++k;
  }

  const std::size_t r = pivots.size();
  Echelon out{RatMat(r, cols), pivots};
  for (std::size_t i = 0; i < r; ++i) {
    const Integer& p = a[i][pivots[i]];
    for (std::size_t j = pivots[i]; j < cols; ++j)
      if (sgn(a[i][j]) != 0) {
        Rational& x = out.rref(i, j);
        x = Rational(a[i][j], p);
        x.canonicalize();
      }
  }
  for (std::size_t i = r; i-- > 0;) {
    const std::size_t pc = pivots[i];
    for (std::size_t above = 0; above < i; ++above) {
      const Rational f = out.rref(above, pc);
      if (sgn(f) == 0) continue;
      for (std::size_t j = pc; j < cols; ++j)
        if (sgn(out.rref(i, j)) != 0) out.rref(above, j) -= f * out.rref(i, j);
    }
  }
  return out;
}

std::size_t rank(const RatMat& m) { return echelon(m).pivots.size(); }

std::vector<Vector> kernel_basis(const RatMat& m) {
  const Echelon e = echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rref(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vector> intersect_kernels(std::span<const RatMat> ms, std::size_t cols) {
  for (const auto& m : ms)
    if (m.cols() != cols)
      throw PreconditionError("intersect_kernels: matrices must share the column count");
  if (ms.empty()) return kernel_basis(RatMat(0, cols));
  return kernel_basis(vstack(ms));
}

RatMat column_space(const RatMat& m) {
  const Echelon e = echelon(m);
  RatMat out(m.rows(), e.pivots.size());
  for (std::size_t k = 0; k < e.pivots.size(); ++k)
    for (std::size_t r = 0; r < m.rows(); ++r) out(r, k) = m(r, e.pivots[k]);
  return out;
}

bool solve_in_span(const RatMat& basis, std::span<const Rational> v, Vector& x) {
  RatMat rhs(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) rhs(i, 0) = v[i];
  RatMat sol;
  if (!solve_columns(basis, rhs, sol)) return false;
  x = sol.column(0);
  return true;
}

bool solve_columns(const RatMat& basis, const RatMat& rhs, RatMat& out) {
  if (basis.rows() != rhs.rows()) throw PreconditionError("solve_columns: row mismatch");
  const std::size_t k = basis.cols();
  const std::array<RatMat, 2> parts{basis, rhs};
  const Echelon e = echelon(hstack(parts));
  std::size_t basis_rank = 0;
  for (auto c : e.pivots) {
    if (c >= k) return false;
    ++basis_rank;
  }
  if (basis_rank != k) throw PreconditionError("solve_columns: basis columns are dependent");
  out = RatMat(k, rhs.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < rhs.cols(); ++j) out(e.pivots[i], j) = e.rref(i, k + j);
  return true;
}

bool same_column_space(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows()) return false;
  const std::size_t ra = rank(a);
  if (ra != rank(b)) return false;
  const std::array<RatMat, 2> parts{a, b};
  return rank(hstack(parts)) == ra;
}

}  // namespace la
}  // namespace sb
