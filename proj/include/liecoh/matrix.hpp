#pragma once

#include "liecoh/numeric.hpp"

#include <stdexcept>
#include <vector>

namespace liecoh {

// dense exact-rational matrix, just enough linear algebra for this project
class RatMat {
 public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static RatMat identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; i++) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rat& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool operator==(const RatMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  RatMat operator*(const RatMat& o) const;
  RatMat operator-(const RatMat& o) const;
  RatMat transpose() const;

  int rank() const;
  Rat det() const;
  RatMat inverse() const;  // throws on singular
  std::vector<std::vector<Rat>> nullspace() const;

  // coefficients of det(xI - A), length n+1, leading coeff 1
  std::vector<Rat> charpoly() const;

  bool is_integral() const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

// solve A x = b exactly; throws if inconsistent or underdetermined
std::vector<Rat> solve_linear(const RatMat& A, const std::vector<Rat>& b);

}  // namespace liecoh
