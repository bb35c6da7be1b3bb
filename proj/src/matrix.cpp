#include "liecoh/matrix.hpp"

namespace liecoh {

RatMat RatMat::operator*(const RatMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  RatMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; i++)
    for (int k = 0; k < cols_; k++) {
      const Rat& aik = (*this)(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; j++) r(i, j) += aik * o(k, j);
    }
  return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  RatMat r(rows_, cols_);
  for (int i = 0; i < rows_; i++)
    for (int j = 0; j < cols_; j++) r(i, j) = (*this)(i, j) - o(i, j);
  return r;
}

RatMat RatMat::transpose() const {
  RatMat r(cols_, rows_);
  for (int i = 0; i < rows_; i++)
    for (int j = 0; j < cols_; j++) r(j, i) = (*this)(i, j);
  return r;
}

namespace {

// row-reduce in place, returns pivot columns
std::vector<int> row_echelon(RatMat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); c++) {
    int p = -1;
    for (int i = r; i < m.rows(); i++)
      if (m(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); j++) std::swap(m(p, j), m(r, j));
    Rat inv = 1 / m(r, c);
    for (int j = c; j < m.cols(); j++) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); i++) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (int j = c; j < m.cols(); j++) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    r++;
  }
  return pivots;
}

}  // namespace

int RatMat::rank() const {
  RatMat m = *this;
  return static_cast<int>(row_echelon(m).size());
}

Rat RatMat::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
  RatMat m = *this;
  Rat d = 1;
  for (int c = 0; c < cols_; c++) {
    int p = -1;
    for (int i = c; i < rows_; i++)
      if (m(i, c) != 0) { p = i; break; }
    if (p < 0) return 0;
    if (p != c) {
      for (int j = 0; j < cols_; j++) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    Rat inv = 1 / m(c, c);
    for (int i = c + 1; i < rows_; i++) {
      if (m(i, c) == 0) continue;
      Rat f = m(i, c) * inv;
      for (int j = c; j < cols_; j++) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

RatMat RatMat::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  RatMat aug(rows_, 2 * cols_);
  for (int i = 0; i < rows_; i++) {
    for (int j = 0; j < cols_; j++) aug(i, j) = (*this)(i, j);
    aug(i, cols_ + i) = 1;
  }
  auto pivots = row_echelon(aug);
  if (static_cast<int>(pivots.size()) != rows_) throw std::runtime_error("singular matrix");
  RatMat r(rows_, cols_);
  for (int i = 0; i < rows_; i++)
    for (int j = 0; j < cols_; j++) r(i, j) = aug(i, cols_ + j);
  return r;
}

std::vector<std::vector<Rat>> RatMat::nullspace() const {
  RatMat m = *this;
  auto pivots = row_echelon(m);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (int c = 0; c < cols_; c++) {
    if (is_pivot[c]) continue;
    std::vector<Rat> v(cols_);
    v[c] = 1;
    for (size_t r = 0; r < pivots.size(); r++) v[pivots[r]] = -m(int(r), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rat> RatMat::charpoly() const {
  if (rows_ != cols_) throw std::invalid_argument("charpoly of non-square matrix");
  // Faddeev-LeVerrier
  int n = rows_;
  std::vector<Rat> c(n + 1);
  c[n] = 1;
  RatMat M = RatMat::identity(n);
  for (int k = 1; k <= n; k++) {
    RatMat AM = (*this) * M;
    Rat tr = 0;
    for (int i = 0; i < n; i++) tr += AM(i, i);
    c[n - k] = -tr / k;
    M = AM;
    for (int i = 0; i < n; i++) M(i, i) += c[n - k];
  }
  return c;
}

bool RatMat::is_integral() const {
  for (int i = 0; i < rows_; i++)
    for (int j = 0; j < cols_; j++)
      if ((*this)(i, j).get_den() != 1) return false;
  return true;
}

std::vector<Rat> solve_linear(const RatMat& A, const std::vector<Rat>& b) {
  if (static_cast<int>(b.size()) != A.rows()) throw std::invalid_argument("solve shape mismatch");
  RatMat aug(A.rows(), A.cols() + 1);
  for (int i = 0; i < A.rows(); i++) {
    for (int j = 0; j < A.cols(); j++) aug(i, j) = A(i, j);
    aug(i, A.cols()) = b[i];
  }
  auto pivots = row_echelon(aug);
  if (!pivots.empty() && pivots.back() == A.cols())
    throw std::runtime_error("inconsistent linear system");
  if (static_cast<int>(pivots.size()) != A.cols())
    throw std::runtime_error("underdetermined linear system");
  std::vector<Rat> x(A.cols());
  for (int r = 0; r < A.cols(); r++) x[pivots[r]] = aug(r, A.cols());
  return x;
}

}  // namespace liecoh
