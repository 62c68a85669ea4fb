#ifndef CANFORM_MATRIX_HPP
#define CANFORM_MATRIX_HPP

#include <optional>
#include <vector>

#include "canform/rat.hpp"

namespace canform {

// Dense rational matrix, row-major. Small sizes only (facet solves, cone
// determinants), so no pivoting heuristics beyond "first nonzero".
class RatMatrix {
 public:
  RatMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(size_t(rows) * cols, Rat(0)) {}

  static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows) {
    if (rows.empty()) return RatMatrix(0, 0);
    RatMatrix m(static_cast<int>(rows.size()),
                static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows_; ++i) {
      if (static_cast<int>(rows[i].size()) != m.cols_)
        throw InternalError("ragged matrix rows");
      for (int j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  static RatMatrix from_columns(const std::vector<std::vector<Rat>>& cols) {
    RatMatrix m = from_rows(cols);
    return m.transposed();
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  RatMatrix transposed() const {
    RatMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  std::vector<Rat> row(int i) const {
    std::vector<Rat> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
  }

  bool operator==(const RatMatrix& o) const = default;

 private:
  int rows_, cols_;
  std::vector<Rat> e_;
};

// Fraction-free (Bareiss) elimination. Each division below is exact, so no
// intermediate blowup beyond the final determinant's size.
inline Rat det(RatMatrix m) {
  if (m.rows() != m.cols()) throw InternalError("det: matrix not square");
  const int n = m.rows();
  if (n == 0) return 1;
  Rat prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r)
      if (m.at(r, k) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return Rat(sign) * m.at(n - 1, n - 1);
}

// Reduced row echelon form; canonical for the row space, used to compare
// and intersect linear subspaces exactly.
inline RatMatrix rref(RatMatrix m) {
  int lead = 0;
  for (int r = 0; r < m.rows() && lead < m.cols(); ++r) {
    int piv = -1;
    while (lead < m.cols()) {
      for (int i = r; i < m.rows(); ++i)
        if (m.at(i, lead) != 0) {
          piv = i;
          break;
        }
      if (piv >= 0) break;
      ++lead;
    }
    if (piv < 0) break;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    const Rat p = m.at(r, lead);
    for (int j = 0; j < m.cols(); ++j) m.at(r, j) /= p;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, lead) == 0) continue;
      const Rat f = m.at(i, lead);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++lead;
  }
  return m;
}

inline int rank(const RatMatrix& m) {
  RatMatrix r = rref(m);
  int rk = 0;
  for (int i = 0; i < r.rows(); ++i) {
    bool nonzero = false;
    for (int j = 0; j < r.cols(); ++j)
      if (r.at(i, j) != 0) {
        nonzero = true;
        break;
      }
    if (nonzero) ++rk;
  }
  return rk;
}

// Basis of {x : m x = 0} read off the rref: one vector per free column.
inline std::vector<std::vector<Rat>> nullspace(const RatMatrix& m) {
  RatMatrix r = rref(m);
  const int n = m.cols();
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(n, false);
  for (int i = 0; i < r.rows(); ++i) {
    for (int j = 0; j < n; ++j)
      if (r.at(i, j) != 0) {
        pivot_col.push_back(j);
        is_pivot[j] = true;
        break;
      }
  }
  std::vector<std::vector<Rat>> basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(n, Rat(0));
    v[f] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -r.at(int(i), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Unique solution of a nonsingular square system; nullopt when singular.
inline std::optional<std::vector<Rat>> linear_solve(const RatMatrix& m,
                                                    const std::vector<Rat>& b) {
  if (m.rows() != m.cols()) throw InternalError("linear_solve: not square");
  const int n = m.rows();
  if (static_cast<int>(b.size()) != n)
    throw InternalError("linear_solve: rhs size mismatch");
  RatMatrix aug(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n) = b[i];
  }
  RatMatrix r = rref(aug);
  for (int i = 0; i < n; ++i)
    if (r.at(i, i) != 1) return std::nullopt;  // rank deficient
  std::vector<Rat> x(n);
  for (int i = 0; i < n; ++i) x[i] = r.at(i, n);
  return x;
}

// Affine rank of a point set (dimension of its affine hull).
inline int affine_rank(const std::vector<std::vector<Rat>>& pts) {
  if (pts.size() <= 1) return 0;
  std::vector<std::vector<Rat>> diffs;
  for (size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rat> d(pts[i].size());
    for (size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
    diffs.push_back(std::move(d));
  }
  return rank(RatMatrix::from_rows(diffs));
}

}  // namespace canform

#endif
