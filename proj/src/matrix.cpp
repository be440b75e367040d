#include "scrollkit/matrix.hpp"

#include <algorithm>
#include <utility>

#include "scrollkit/error.hpp"

namespace scrollkit {

Matrix::Matrix(const Field& k, std::size_t rows, std::size_t cols)
    : field_(k), rows_(rows), cols_(cols), entries_(rows * cols, k.zero()) {}

Matrix Matrix::identity(const Field& k, std::size_t n) {
  Matrix m(k, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = k.one();
  return m;
}

Matrix Matrix::from_rows(const Field& k, const std::vector<Vector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(k, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::kInvalidArgument, "ragged rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c].field() != k) throw Error(ErrorCode::kFieldMismatch, "matrix entry from another field");
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::from_ints(const Field& k, const std::vector<std::vector<long>>& rows) {
  std::vector<Vector> v;
  for (const auto& row : rows) {
    Vector r;
    for (long x : row) r.push_back(k.from_int(x));
    v.push_back(std::move(r));
  }
  return from_rows(k, v);
}

Vector Matrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw Error(ErrorCode::kInvalidArgument, "dimension mismatch in matrix-vector product");
  Vector out(rows_, field_.zero());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::hstack(const Matrix& right) const {
  if (right.rows_ != rows_) throw Error(ErrorCode::kInvalidArgument, "hstack row mismatch");
  Matrix m(field_, rows_, cols_ + right.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < right.cols_; ++c) m(r, cols_ + c) = right(r, c);
  }
  return m;
}

bool Matrix::is_zero() const { return is_zero_vector(entries_); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::kInvalidArgument, "dimension mismatch in matrix product");
  Matrix m(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += x * b(k, j);
    }
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && std::equal(a.entries_.begin(), a.entries_.end(), b.entries_.begin());
}

std::vector<std::vector<std::string>> Matrix::serialize() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r].push_back((*this)(r, c).to_string());
  return out;
}

bool is_zero_vector(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

Vector linear_combination(const std::vector<Vector>& basis, std::span<const Scalar> coeffs) {
  if (basis.empty() || basis.size() != coeffs.size()) throw Error(ErrorCode::kInvalidArgument, "bad combination");
  Vector out(basis.front().size(), coeffs.front().field().zero());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += coeffs[i] * basis[i][j];
  }
  return out;
}

// ---------------------------------------------------------------- elimination

namespace {

// Bareiss forward elimination on an integer matrix. Returns the pivot columns;
// rows [0, rank) then hold a fraction-free echelon form.
std::vector<std::size_t> bareiss_forward(std::vector<std::vector<mpz_class>>& a, std::size_t cols) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const mpz_class& piv = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = piv * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

RowEchelon reduce_rational(const Matrix& m) {
  const Field k = m.field();
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).rational().get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpq_class& q = m(r, c).rational();
      a[r][c] = q.get_num() * (l / q.get_den());
    }
  }
  auto pivots = bareiss_forward(a, m.cols());

  // Back substitution over Q on the echelon rows only.
  const std::size_t rank = pivots.size();
  std::vector<std::vector<mpq_class>> e(rank, std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < rank; ++r) {
    mpq_class inv(1);
    inv /= a[r][pivots[r]];
    for (std::size_t c = pivots[r]; c < m.cols(); ++c) e[r][c] = a[r][c] * inv;
  }
  for (std::size_t r = rank; r-- > 0;) {
    for (std::size_t i = 0; i < r; ++i) {
      mpq_class f = e[i][pivots[r]];
      if (f == 0) continue;
      for (std::size_t c = pivots[r]; c < m.cols(); ++c) e[i][c] -= f * e[r][c];
    }
  }
  Matrix out(k, m.rows(), m.cols());
  for (std::size_t r = 0; r < rank; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Scalar(e[r][c]);
  return {std::move(out), std::move(pivots)};
}

RowEchelon reduce_modular(const Matrix& m) {
  const std::uint64_t p = m.field().modulus();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).residue();

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t q = r;
    while (q < rows && a[q][c] == 0) ++q;
    if (q == rows) continue;
    std::swap(a[q], a[r]);
    const std::uint64_t inv = detail::pow_mod(a[r][c], p - 2, p);
    for (std::size_t j = c; j < cols; ++j) a[r][j] = detail::mul_mod(a[r][j], inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::uint64_t f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        std::uint64_t t = detail::mul_mod(f, a[r][j], p);
        a[i][j] = a[i][j] >= t ? a[i][j] - t : a[i][j] + (p - t);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix out(m.field(), rows, cols);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t c = 0; c < cols; ++c) out(i, c) = Scalar(a[i][c], p);
  return {std::move(out), std::move(pivots)};
}

}  // namespace

RowEchelon row_reduce(const Matrix& m) {
  return m.field().is_rational() ? reduce_rational(m) : reduce_modular(m);
}

RankKernel rank_kernel(const Matrix& m) {
  const Field k = m.field();
  RowEchelon e = row_reduce(m);
  RankKernel out;
  out.rank = e.pivots.size();
  out.pivots = e.pivots;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols(), k.zero());
    v[f] = k.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::optional<Vector> solve(const Matrix& a, std::span<const Scalar> b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::kInvalidArgument, "right-hand side has wrong length");
  Matrix rhs(a.field(), a.rows(), 1);
  for (std::size_t r = 0; r < a.rows(); ++r) rhs(r, 0) = b[r];
  RowEchelon e = row_reduce(a.hstack(rhs));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols(), a.field().zero());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::kInvalidArgument, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  RowEchelon e = row_reduce(a.hstack(Matrix::identity(a.field(), n)));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(a.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

}  // namespace scrollkit
