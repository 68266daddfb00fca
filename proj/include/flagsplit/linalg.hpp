#pragma once

// Small dense exact linear algebra: row reduction, solving and inversion over
// Q and over F_p. Sizes here are tiny (at most a few hundred columns), so a
// straightforward fraction-exact Gauss-Jordan is entirely adequate.

#include <cstdint>
#include <vector>

#include "flagsplit/errors.hpp"
#include "flagsplit/rational.hpp"

namespace flagsplit {

template <class T>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<T> a;  // row-major

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}

  T& at(int r, int c) { return a[size_t(r) * cols + c]; }
  const T& at(int r, int c) const { return a[size_t(r) * cols + c]; }

  bool operator==(const Mat&) const = default;

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }
};

using QMat = Mat<Rational>;
using PMat = Mat<uint32_t>;  // entries in 0..p-1; p carried by the caller
using IMat = Mat<long long>;

// Reduced row echelon form in place; returns the pivot columns in order.
std::vector<int> rref(QMat& m);
std::vector<int> rref(PMat& m, uint32_t p);

QMat mul(const QMat&, const QMat&);
PMat mul(const PMat&, const PMat&, uint32_t p);
IMat mul(const IMat&, const IMat&);
PMat add(const PMat&, const PMat&, uint32_t p);

// Inverse of a square invertible matrix; throws InternalError if singular.
QMat inverse(const QMat&);

// Solve A x = b for the unique solution; throws InternalError if the system
// is not uniquely solvable.
std::vector<Rational> solve(const QMat& A, const std::vector<Rational>& b);

int rank(PMat m, uint32_t p);

// Canonical basis of the row space: the nonzero rows of the RREF. Two
// subspaces are equal iff their canonical bases are identical matrices.
PMat row_space_basis(PMat m, uint32_t p);

PMat reduce_mod_p(const QMat&, uint32_t p);  // requires p-integral entries
PMat reduce_mod_p(const IMat&, uint32_t p);

}  // namespace flagsplit
