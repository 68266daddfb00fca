#include "flagsplit/linalg.hpp"

#include <numeric>

namespace flagsplit {

uint32_t inv_p(uint32_t a, uint32_t p) {
  if (a % p == 0) throw InternalError("inverse of 0 mod p");
  // extended Euclid on (a, p)
  int64_t t = 0, newt = 1, r = p, newr = a % p;
  while (newr != 0) {
    int64_t q = r / newr;
    t = std::exchange(newt, t - q * newt);
    r = std::exchange(newr, r - q * newr);
  }
  if (t < 0) t += p;
  return uint32_t(t);
}

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<int> rref(QMat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int sel = -1;
    for (int r = row; r < m.rows; ++r)
      if (m.at(r, col) != 0) { sel = r; break; }
    if (sel < 0) continue;
    if (sel != row)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
    Rational inv = Rational(1) / m.at(row, col);
    for (int c = col; c < m.cols; ++c) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      Rational f = m.at(r, col);
      for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<int> rref(PMat& m, uint32_t p) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int sel = -1;
    for (int r = row; r < m.rows; ++r)
      if (m.at(r, col) != 0) { sel = r; break; }
    if (sel < 0) continue;
    if (sel != row)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
    uint32_t inv = inv_p(m.at(row, col), p);
    for (int c = col; c < m.cols; ++c) m.at(row, c) = mul_p(m.at(row, c), inv, p);
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      uint32_t f = m.at(r, col);
      for (int c = col; c < m.cols; ++c)
        m.at(r, c) = sub_p(m.at(r, c), mul_p(f, m.at(row, c), p), p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

QMat mul(const QMat& a, const QMat& b) {
  require(a.cols == b.rows, "QMat dimension mismatch");
  QMat out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

PMat mul(const PMat& a, const PMat& b, uint32_t p) {
  require(a.cols == b.rows, "PMat dimension mismatch");
  PMat out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols; ++j)
        out.at(i, j) = add_p(out.at(i, j), mul_p(a.at(i, k), b.at(k, j), p), p);
    }
  return out;
}

IMat mul(const IMat& a, const IMat& b) {
  require(a.cols == b.rows, "IMat dimension mismatch");
  IMat out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

PMat add(const PMat& a, const PMat& b, uint32_t p) {
  require(a.rows == b.rows && a.cols == b.cols, "PMat shape mismatch");
  PMat out(a.rows, a.cols);
  for (size_t i = 0; i < a.a.size(); ++i) out.a[i] = add_p(a.a[i], b.a[i], p);
  return out;
}

QMat inverse(const QMat& m) {
  require(m.rows == m.cols, "inverse of non-square matrix");
  int n = m.rows;
  QMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  require(int(pivots.size()) == n && pivots.back() == n - 1, "singular matrix");
  QMat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

std::vector<Rational> solve(const QMat& A, const std::vector<Rational>& b) {
  require(int(b.size()) == A.rows, "solve: rhs size mismatch");
  QMat aug(A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  auto pivots = rref(aug);
  // unique solution: every column has a pivot, rhs column does not
  require(!pivots.empty() && pivots.back() != A.cols, "solve: inconsistent system");
  require(int(pivots.size()) == A.cols, "solve: underdetermined system");
  std::vector<Rational> x(A.cols);
  for (int r = 0; r < int(pivots.size()); ++r) x[pivots[r]] = aug.at(r, A.cols);
  return x;
}

int rank(PMat m, uint32_t p) { return int(rref(m, p).size()); }

PMat row_space_basis(PMat m, uint32_t p) {
  auto pivots = rref(m, p);
  PMat out(int(pivots.size()), m.cols);
  for (int r = 0; r < out.rows; ++r)
    for (int c = 0; c < m.cols; ++c) out.at(r, c) = m.at(r, c);
  return out;
}

PMat reduce_mod_p(const QMat& m, uint32_t p) {
  PMat out(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) out.a[i] = mod_p(m.a[i], p);
  return out;
}

PMat reduce_mod_p(const IMat& m, uint32_t p) {
  PMat out(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) {
    long long v = m.a[i] % (long long)p;
    if (v < 0) v += p;
    out.a[i] = uint32_t(v);
  }
  return out;
}

}  // namespace flagsplit
