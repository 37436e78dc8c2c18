#include "hq/mat.hpp"

#include <stdexcept>

namespace hq {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols_, int nrows) {
  Mat m(nrows, static_cast<int>(cols_.size()));
  for (int j = 0; j < m.cols; ++j) {
    if (static_cast<int>(cols_[j].size()) != nrows)
      throw std::invalid_argument("from_cols: column length mismatch");
    for (int i = 0; i < nrows; ++i) m(i, j) = cols_[j][i];
  }
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows_, int ncols) {
  Mat m(static_cast<int>(rows_.size()), ncols);
  for (int i = 0; i < m.rows; ++i) {
    if (static_cast<int>(rows_[i].size()) != ncols)
      throw std::invalid_argument("from_rows: row length mismatch");
    for (int j = 0; j < ncols; ++j) m(i, j) = rows_[i][j];
  }
  return m;
}

Mat Mat::col(const Vec& v) { return from_cols({v}, static_cast<int>(v.size())); }
Mat Mat::row(const Vec& v) { return from_rows({v}, static_cast<int>(v.size())); }

Vec Mat::column(int j) const {
  Vec v(rows);
  for (int i = 0; i < rows; ++i) v[i] = (*this)(i, j);
  return v;
}

Vec Mat::rowvec(int i) const {
  Vec v(cols);
  for (int j = 0; j < cols; ++j) v[j] = (*this)(i, j);
  return v;
}

bool Mat::is_zero() const {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows != o.rows || cols != o.cols) throw std::invalid_argument("Mat+: shape mismatch");
  Mat m(rows, cols);
  for (size_t k = 0; k < a.size(); ++k) m.a[k] = a[k] + o.a[k];
  return m;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows != o.rows || cols != o.cols) throw std::invalid_argument("Mat-: shape mismatch");
  Mat m(rows, cols);
  for (size_t k = 0; k < a.size(); ++k) m.a[k] = a[k] - o.a[k];
  return m;
}

Mat Mat::operator-() const { return scaled(Rat(-1)); }

Mat Mat::scaled(const Rat& c) const {
  Mat m(rows, cols);
  for (size_t k = 0; k < a.size(); ++k) m.a[k] = c * a[k];
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols != o.rows) throw std::invalid_argument("Mat*: shape mismatch");
  Mat m(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Rat& x = (*this)(i, k);
      if (x == 0) continue;  // structure constants are sparse; skip zeros
      for (int j = 0; j < o.cols; ++j) {
        const Rat& y = o(k, j);
        if (y != 0) m(i, j) += x * y;
      }
    }
  return m;
}

Vec Mat::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("apply: length mismatch");
  Vec r(rows, Rat(0));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const Rat& x = (*this)(i, j);
      if (x != 0 && v[j] != 0) r[i] += x * v[j];
    }
  return r;
}

Rref rref(const Mat& m) {
  Rref out;
  out.echelon = m;
  Mat& e = out.echelon;
  int r = 0;
  for (int c = 0; c < e.cols && r < e.rows; ++c) {
    int piv = -1;
    for (int i = r; i < e.rows; ++i)
      if (e(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < e.cols; ++j) std::swap(e(piv, j), e(r, j));
    Rat inv = 1 / e(r, c);
    for (int j = c; j < e.cols; ++j) e(r, j) *= inv;
    for (int i = 0; i < e.rows; ++i) {
      if (i == r || e(i, c) == 0) continue;
      Rat f = e(i, c);
      for (int j = c; j < e.cols; ++j) e(i, j) -= f * e(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::vector<Vec> kernel_basis(const Mat& m) {
  Rref rr = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : rr.pivot_cols) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols, Rat(0));
    v[f] = 1;
    for (int i = 0; i < rr.rank; ++i) v[rr.pivot_cols[i]] = -rr.echelon(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> preimage(const Mat& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows) throw std::invalid_argument("preimage: length mismatch");
  Mat aug = hstack(m, Mat::col(b));
  Rref rr = rref(aug);
  // Inconsistent iff a pivot lands in the augmented column.
  for (int p : rr.pivot_cols)
    if (p == m.cols) return std::nullopt;
  Vec x(m.cols, Rat(0));
  for (int i = 0; i < rr.rank; ++i) x[rr.pivot_cols[i]] = rr.echelon(i, m.cols);
  return x;
}

std::optional<Mat> preimage_cols(const Mat& m, const Mat& B) {
  if (B.rows != m.rows) throw std::invalid_argument("preimage_cols: shape mismatch");
  Mat X(m.cols, B.cols);
  for (int j = 0; j < B.cols; ++j) {
    auto x = preimage(m, B.column(j));
    if (!x) return std::nullopt;
    for (int i = 0; i < m.cols; ++i) X(i, j) = (*x)[i];
  }
  return X;
}

Mat kron(const Mat& x, const Mat& y) {
  Mat m(x.rows * y.rows, x.cols * y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) {
      const Rat& v = x(i, j);
      if (v == 0) continue;
      for (int p = 0; p < y.rows; ++p)
        for (int q = 0; q < y.cols; ++q) {
          const Rat& w = y(p, q);
          if (w != 0) m(i * y.rows + p, j * y.cols + q) = v * w;
        }
    }
  return m;
}

Vec kron_vec(const Vec& x, const Vec& y) {
  Vec r(x.size() * y.size(), Rat(0));
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0) r[i * y.size() + j] = x[i] * y[j];
  }
  return r;
}

Mat hstack(const Mat& x, const Mat& y) {
  if (x.rows != y.rows) throw std::invalid_argument("hstack: row mismatch");
  Mat m(x.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) m(i, j) = x(i, j);
    for (int j = 0; j < y.cols; ++j) m(i, x.cols + j) = y(i, j);
  }
  return m;
}

Mat vstack(const Mat& x, const Mat& y) {
  if (x.cols != y.cols) throw std::invalid_argument("vstack: col mismatch");
  Mat m(x.rows + y.rows, x.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) m(i, j) = x(i, j);
  for (int i = 0; i < y.rows; ++i)
    for (int j = 0; j < x.cols; ++j) m(x.rows + i, j) = y(i, j);
  return m;
}

Mat vstack(const std::vector<Mat>& blocks) {
  if (blocks.empty()) return Mat();
  Mat m = blocks[0];
  for (size_t i = 1; i < blocks.size(); ++i) m = vstack(m, blocks[i]);
  return m;
}

int rank(const Mat& m) { return rref(m).rank; }

Mat left_inverse(const Mat& m) {
  auto X = preimage_cols(m.transpose(), Mat::identity(m.cols));
  if (!X) throw std::invalid_argument("left_inverse: matrix does not have full column rank");
  return X->transpose();
}

Mat flip_matrix(int dv, int dw) {
  Mat m(dv * dw, dv * dw);
  for (int i = 0; i < dv; ++i)
    for (int j = 0; j < dw; ++j) m(j * dv + i, i * dw + j) = 1;
  return m;
}

Rat dot(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: length mismatch");
  Rat r(0);
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0 && y[i] != 0) r += x[i] * y[i];
  return r;
}

Vec add(const Vec& x, const Vec& y) {
  Vec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

Vec sub(const Vec& x, const Vec& y) {
  Vec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

Vec scale(const Rat& c, const Vec& v) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Mat mul_kron(const Mat& m, const Mat& x, const Mat& y) {
  if (m.cols != x.rows * y.rows) throw std::invalid_argument("mul_kron: shape mismatch");
  Mat out(m.rows, x.cols * y.cols);
  for (int jx = 0; jx < x.cols; ++jx)
    for (int jy = 0; jy < y.cols; ++jy) {
      int jout = jx * y.cols + jy;
      for (int ix = 0; ix < x.rows; ++ix) {
        const Rat& cx = x(ix, jx);
        if (cx == 0) continue;
        for (int iy = 0; iy < y.rows; ++iy) {
          const Rat& cy = y(iy, jy);
          if (cy == 0) continue;
          Rat c = cx * cy;
          int k = ix * y.rows + iy;  // row of kron(x, y) = column index into m
          for (int i = 0; i < m.rows; ++i) {
            const Rat& cm = m(i, k);
            if (cm != 0) out(i, jout) += cm * c;
          }
        }
      }
    }
  return out;
}

Mat kron_mul(const Mat& x, const Mat& y, const Mat& m) {
  if (m.rows != x.cols * y.cols) throw std::invalid_argument("kron_mul: shape mismatch");
  Mat out(x.rows * y.rows, m.cols);
  for (int j = 0; j < m.cols; ++j)
    for (int k = 0; k < m.rows; ++k) {
      const Rat& cm = m(k, j);
      if (cm == 0) continue;
      int jx = k / y.cols, jy = k % y.cols;
      for (int ix = 0; ix < x.rows; ++ix) {
        const Rat& cx = x(ix, jx);
        if (cx == 0) continue;
        Rat c = cm * cx;
        for (int iy = 0; iy < y.rows; ++iy) {
          const Rat& cy = y(iy, jy);
          if (cy != 0) out(ix * y.rows + iy, j) += c * cy;
        }
      }
    }
  return out;
}

}  // namespace hq
