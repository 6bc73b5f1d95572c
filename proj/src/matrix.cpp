#include "nncirc/matrix.hpp"

namespace nncirc {

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matmul: shape mismatch");
  RatMatrix out(rows_, rhs.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Rat& v = (*this)(i, k);
      if (v == 0) continue;
      for (size_t j = 0; j < rhs.cols_; ++j) out(i, j) += v * rhs(k, j);
    }
  return out;
}

int resolution(const RatMatrix& m) {
  int r = 0;
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r = std::max(r, resolution(m(i, j)));
  return r;
}

namespace {

// Elimination on an augmented system [A | B]; returns the determinant of A.
// A must be square. B may have zero columns.
Rat eliminate(RatMatrix& a, RatMatrix& b) {
  size_t n = a.rows();
  Rat d = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (size_t j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
      for (size_t j = 0; j < b.cols(); ++j) std::swap(b(col, j), b(piv, j));
      d = -d;
    }
    d *= a(col, col);
    for (size_t i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      Rat f = a(i, col) / a(col, col);
      for (size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
      for (size_t j = 0; j < b.cols(); ++j) b(i, j) -= f * b(col, j);
    }
  }
  return d;
}

}  // namespace

Rat det(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det: not square");
  RatMatrix work = a;
  RatMatrix empty(a.rows(), 0);
  return eliminate(work, empty);
}

RatVec solve_linear(const RatMatrix& a, const RatVec& b) {
  size_t n = a.rows();
  if (n != a.cols() || b.size() != n) throw std::invalid_argument("solve: shape mismatch");
  RatMatrix u = a;
  RatMatrix rhs(n, 1);
  for (size_t i = 0; i < n; ++i) rhs(i, 0) = b[i];
  if (eliminate(u, rhs) == 0) throw Singular();
  RatVec x(n);
  for (size_t i = n; i-- > 0;) {
    Rat s = rhs(i, 0);
    for (size_t j = i + 1; j < n; ++j) s -= u(i, j) * x[j];
    x[i] = s / u(i, i);
  }
  return x;
}

RatMatrix mp_inverse(const RatMatrix& w) {
  size_t m = w.rows(), n = w.cols();
  if (m > n) throw std::invalid_argument("mp_inverse: needs m <= n");
  RatMatrix gram = w * w.transpose();
  RatMatrix u = gram;
  RatMatrix rhs = RatMatrix::identity(m);
  if (eliminate(u, rhs) == 0) throw RankDeficient();
  // back-substitute each identity column to get gram^-1
  RatMatrix inv(m, m);
  for (size_t c = 0; c < m; ++c) {
    for (size_t i = m; i-- > 0;) {
      Rat s = rhs(i, c);
      for (size_t j = i + 1; j < m; ++j) s -= u(i, j) * inv(j, c);
      inv(i, c) = s / u(i, i);
    }
  }
  return w.transpose() * inv;
}

}  // namespace nncirc
