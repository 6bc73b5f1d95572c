#pragma once

#include "nncirc/rational.hpp"

#include <cstddef>

namespace nncirc {

struct RankDeficient : std::runtime_error {
  RankDeficient() : std::runtime_error("matrix is rank deficient") {}
};
struct Singular : std::runtime_error {
  Singular() : std::runtime_error("matrix is singular") {}
};

// Dense row-major rational matrix.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMatrix identity(size_t n) {
    RatMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rat& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  RatVec row(size_t i) const {
    return RatVec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& rhs) const;
  bool operator==(const RatMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
  }

 private:
  size_t rows_, cols_;
  RatVec a_;
};

// RES(A) = max over entries; 0 for an empty matrix.
int resolution(const RatMatrix& m);

// Exact determinant by Gaussian elimination, first nonzero pivot.
Rat det(const RatMatrix& a);

// Exact solution of Ax = b for square nonsingular A. Throws Singular.
RatVec solve_linear(const RatMatrix& a, const RatVec& b);

// Moore-Penrose inverse W+ = W^T (W W^T)^-1 for full row rank W (m <= n).
// Throws RankDeficient when det(W W^T) = 0.
RatMatrix mp_inverse(const RatMatrix& w);

}  // namespace nncirc
