#pragma once
// Dense exact rational matrices and the linear-algebra kernel everything else
// sits on: reduced row echelon form, kernels, deterministic preimages and
// Kronecker products. Basis conventions are fixed once and for all here:
//  - tensor bases are lexicographic with the LEFT factor as the high-order
//    index: index(e_i (x) e_j) = i*dim_right + j;
//  - kernel bases are in free-column canonical form (free columns increasing,
//    free coordinate = 1);
//  - preimages are the free-variable-zero solution.
#include <optional>
#include <vector>

#include "hq/rat.hpp"

namespace hq {

struct Mat {
  int rows = 0, cols = 0;
  Vec a;  // row-major, rows*cols entries

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}

  Rat& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rat& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Mat identity(int n);
  static Mat zero(int r, int c) { return Mat(r, c); }
  // Matrix whose columns are the given vectors.
  static Mat from_cols(const std::vector<Vec>& cols_, int nrows);
  static Mat from_rows(const std::vector<Vec>& rows_, int ncols);
  static Mat col(const Vec& v);  // n x 1
  static Mat row(const Vec& v);  // 1 x n

  Vec column(int j) const;
  Vec rowvec(int i) const;
  bool is_zero() const;
  Mat transpose() const;

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;  // zero-skipping inner loop
  Mat operator-() const;
  Mat scaled(const Rat& c) const;
  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Vec apply(const Vec& v) const;  // matrix * column vector
};

struct Rref {
  Mat echelon;
  int rank = 0;
  std::vector<int> pivot_cols;
};

// Reduced row echelon form (Gauss-Jordan, leftmost pivots).
Rref rref(const Mat& m);

// Canonical basis of ker(m): one vector per free column f (increasing), with
// coordinate 1 at f and the pivot coordinates filled in from the echelon form.
std::vector<Vec> kernel_basis(const Mat& m);

// Free-variable-zero solution of m x = b, if any.
std::optional<Vec> preimage(const Mat& m, const Vec& b);

// Columnwise preimage: solves m X = B; absent if any column misses the image.
std::optional<Mat> preimage_cols(const Mat& m, const Mat& B);

// Kronecker product, left factor high-order.
Mat kron(const Mat& x, const Mat& y);
Vec kron_vec(const Vec& x, const Vec& y);

// m * kron(x, y) and kron(x, y) * m, assembled column by column so the
// Kronecker factor is never materialized (it can be huge when x, y act on
// tensor powers). Zero entries are skipped throughout.
Mat mul_kron(const Mat& m, const Mat& x, const Mat& y);
Mat kron_mul(const Mat& x, const Mat& y, const Mat& m);

Mat hstack(const Mat& x, const Mat& y);
Mat vstack(const Mat& x, const Mat& y);
Mat vstack(const std::vector<Mat>& blocks);

int rank(const Mat& m);

// Left inverse of a matrix with full column rank (deterministic: solves
// m^T y = e_j with free variables zero). Throws if columns are dependent.
Mat left_inverse(const Mat& m);

// Flip (swap) operator V(x)W -> W(x)V on coordinates, dims (dv, dw).
Mat flip_matrix(int dv, int dw);

Rat dot(const Vec& x, const Vec& y);
Vec add(const Vec& x, const Vec& y);
Vec sub(const Vec& x, const Vec& y);
Vec scale(const Rat& c, const Vec& v);

}  // namespace hq
