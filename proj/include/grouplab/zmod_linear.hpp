#pragma once

// Linear algebra over Z/m for composite m.
//
// Diagonalization uses only unimodular integer operations (swaps and 2x2
// extended-gcd transforms of determinant 1) on entries lifted to [0, m), so
// every transform is invertible mod m and kernels, images and cokernels are
// read off the diagonal: a diagonal entry d contributes gcd(d, m).

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "grouplab/abelian.hpp"
#include "grouplab/error.hpp"

namespace grouplab::zmod {

using Int = std::int64_t;
using Vector = std::vector<Int>;

inline Int reduce(Int x, Int m) {
  x %= m;
  return x < 0 ? x + m : x;
}

/// gcd with the convention gcd(0, m) = m.
inline Int gcd_with(Int d, Int m) { return std::gcd(reduce(d, m), m); }

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Matrix identity(std::size_t n) {
    Matrix i(n, n);
    for (std::size_t k = 0; k < n; ++k) i(k, k) = 1;
    return i;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Int& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Vector row(std::size_t r) const {
    return Vector(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  Vector column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  void append_row(const Vector& v) {
    if (v.size() != cols_) throw Error(ErrorKind::InvalidArgument, "row length mismatch");
    a_.insert(a_.end(), v.begin(), v.end());
    ++rows_;
  }

  Vector apply(const Vector& x, Int m) const {
    Vector y(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
      Int s = 0;
      for (std::size_t c = 0; c < cols_; ++c) s = (s + (*this)(r, c) * x[c]) % m;
      y[r] = reduce(s, m);
    }
    return y;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> a_;
};

namespace detail {

/// s a + t b = g with g = gcd(a, b) for a, b >= 0, not both zero; prefers
/// (s, t) = (1, 0) when a divides b so the pivot row stays unchanged.
struct Bezout {
  Int s, t, g;
};

inline Bezout bezout(Int a, Int b) {
  if (a != 0 && b % a == 0) return {1, 0, a};
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const Int q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  return {old_s, old_t, old_r};
}

// Rows (i, j) <- [[s, t], [-b/g, a/g]] (rows i, j), and the inverse
// transform [[a/g, -t], [b/g, s]] for callers tracking inverses.
inline void row_combine(Vector& ri, Vector& rj, Int s, Int t, Int u, Int v, Int m) {
  for (std::size_t k = 0; k < ri.size(); ++k) {
    const Int x = ri[k], y = rj[k];
    ri[k] = reduce(s * x + t * y, m);
    rj[k] = reduce(u * x + v * y, m);
  }
}

}  // namespace detail

/// Row echelon form spanning the same row space mod m, with at most one row
/// per column. Rows with zero leading columns are folded in as they arrive.
inline Matrix row_span_basis(const Matrix& a, Int m) {
  const std::size_t n = a.cols();
  std::vector<std::optional<Vector>> pivot(n);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Vector row = a.row(r);
    for (auto& x : row) x = reduce(x, m);
    for (std::size_t c = 0; c < n; ++c) {
      if (row[c] == 0) continue;
      if (!pivot[c]) {
        pivot[c] = std::move(row);
        break;
      }
      Vector& p = *pivot[c];
      const auto [s, t, g] = detail::bezout(p[c], row[c]);
      detail::row_combine(p, row, s, t, -row[c] / g, p[c] / g, m);
      // Both new entries at c follow from the transform: g and 0.
    }
  }
  Matrix out(0, n);
  for (auto& p : pivot) {
    if (p) out.append_row(*p);
  }
  return out;
}

/// D = P A Q with P, Q invertible mod m and D diagonal (entries in [0, m)).
/// P and its inverse are tracked only on request; Q and its inverse always.
struct SmithForm {
  Int modulus = 1;
  std::vector<Int> diagonal;  ///< length min(rows, cols)
  Matrix p, p_inv;            ///< rows x rows, empty unless requested
  Matrix q, q_inv;            ///< cols x cols

  /// gcd(d_i, m) for every column i, taking d_i = 0 beyond the diagonal.
  std::vector<Int> column_gcds(std::size_t cols) const {
    std::vector<Int> g(cols, modulus);
    for (std::size_t i = 0; i < diagonal.size() && i < cols; ++i) g[i] = gcd_with(diagonal[i], modulus);
    return g;
  }
};

inline SmithForm smith_form(Matrix a, Int m, bool track_rows) {
  const std::size_t rows = a.rows(), cols = a.cols();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a(r, c) = reduce(a(r, c), m);
  }
  SmithForm f;
  f.modulus = m;
  f.q = Matrix::identity(cols);
  f.q_inv = Matrix::identity(cols);
  if (track_rows) {
    f.p = Matrix::identity(rows);
    f.p_inv = Matrix::identity(rows);
  }

  // Row op on rows (i, j): [[s, t], [u, v]] with det 1; inverse [[v, -t], [-u, s]].
  auto row_op = [&](std::size_t i, std::size_t j, Int s, Int t, Int u, Int v) {
    for (std::size_t c = 0; c < cols; ++c) {
      const Int x = a(i, c), y = a(j, c);
      a(i, c) = reduce(s * x + t * y, m);
      a(j, c) = reduce(u * x + v * y, m);
    }
    if (track_rows) {
      for (std::size_t c = 0; c < rows; ++c) {
        const Int x = f.p(i, c), y = f.p(j, c);
        f.p(i, c) = reduce(s * x + t * y, m);
        f.p(j, c) = reduce(u * x + v * y, m);
      }
      // P_inv <- P_inv * inverse, acting on columns i, j
      for (std::size_t r = 0; r < rows; ++r) {
        const Int x = f.p_inv(r, i), y = f.p_inv(r, j);
        f.p_inv(r, i) = reduce(x * v - y * u, m);
        f.p_inv(r, j) = reduce(-x * t + y * s, m);
      }
    }
  };
  // Column op on columns (i, j): new_i = s col_i + t col_j, new_j = u col_i + v col_j.
  auto col_op = [&](std::size_t i, std::size_t j, Int s, Int t, Int u, Int v) {
    for (std::size_t r = 0; r < rows; ++r) {
      const Int x = a(r, i), y = a(r, j);
      a(r, i) = reduce(s * x + t * y, m);
      a(r, j) = reduce(u * x + v * y, m);
    }
    for (std::size_t r = 0; r < cols; ++r) {
      const Int x = f.q(r, i), y = f.q(r, j);
      f.q(r, i) = reduce(s * x + t * y, m);
      f.q(r, j) = reduce(u * x + v * y, m);
    }
    // Q_inv <- inverse * Q_inv, acting on rows i, j
    for (std::size_t c = 0; c < cols; ++c) {
      const Int x = f.q_inv(i, c), y = f.q_inv(j, c);
      f.q_inv(i, c) = reduce(v * x - u * y, m);
      f.q_inv(j, c) = reduce(-t * x + s * y, m);
    }
  };
  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    // Pivot: nonzero entry with the smallest gcd against m.
    std::size_t pr = rows, pc = cols;
    Int best = m + 1;
    for (std::size_t r = t; r < rows && best > 1; ++r) {
      for (std::size_t c = t; c < cols; ++c) {
        if (a(r, c) == 0) continue;
        const Int g = gcd_with(a(r, c), m);
        if (g < best) {
          best = g;
          pr = r;
          pc = c;
          if (g == 1) break;
        }
      }
    }
    if (pr == rows) break;
    // Swaps are done as [[0, 1], [-1, 0]] to keep determinant 1.
    if (pr != t) row_op(t, pr, 0, 1, -1, 0);
    if (pc != t) col_op(t, pc, 0, 1, -1, 0);
    while (true) {
      bool dirty = false;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a(r, t) == 0) continue;
        const Int x = a(t, t), y = a(r, t);
        const auto [s, tt, g] = detail::bezout(x, y);
        row_op(t, r, s, tt, -y / g, x / g);
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a(t, c) == 0) continue;
        const Int x = a(t, t), y = a(t, c);
        const auto [s, tt, g] = detail::bezout(x, y);
        col_op(t, c, s, tt, -y / g, x / g);
        if (g != x) dirty = true;
      }
      if (!dirty) break;
      for (std::size_t r = t + 1; r < rows && !dirty; ++r) dirty = a(r, t) != 0;
      if (!dirty) break;
    }
    f.diagonal.push_back(a(t, t));
  }
  f.diagonal.resize(steps, 0);
  return f;
}

/// The finite abelian group K / S, where K = {x in (Z/m)^n : A x = 0} and S
/// is the subgroup of K generated by `sub_generators`. Elements are given a
/// basis of cyclic factors with orders `orders()`.
class Subquotient {
 public:
  Subquotient(const Matrix& relations, const std::vector<Vector>& sub_generators, Int m)
      : m_(m), n_(relations.cols()) {
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "modulus must be positive");
    // Kernel of A through the Smith form of a row basis.
    Matrix basis = row_span_basis(relations, m);
    auto kernel_form = smith_form(std::move(basis), m, false);
    const auto g = kernel_form.column_gcds(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (g[i] > 1) {
        kernel_index_.push_back(i);
        kernel_order_.push_back(g[i]);
      }
    }
    q_ = std::move(kernel_form.q);
    q_inv_ = std::move(kernel_form.q_inv);
    kernel_size_ = 1;
    for (auto o : kernel_order_) kernel_size_ *= o;

    // Cokernel of [diag(kernel orders) | S in kernel coordinates].
    const std::size_t r = kernel_order_.size();
    Matrix rel(r, r + sub_generators.size());
    for (std::size_t i = 0; i < r; ++i) rel(i, i) = kernel_order_[i];
    for (std::size_t j = 0; j < sub_generators.size(); ++j) {
      const auto c = kernel_coordinates(sub_generators[j]);
      for (std::size_t i = 0; i < r; ++i) rel(i, r + j) = c[i];
    }
    auto coker = smith_form(std::move(rel), m, true);
    for (std::size_t j = 0; j < r; ++j) {
      const Int h = j < coker.diagonal.size() ? gcd_with(coker.diagonal[j], m) : m;
      if (h > 1) {
        factor_row_.push_back(j);
        orders_.push_back(h);
      }
    }
    p_ = std::move(coker.p);
    p_inv_ = std::move(coker.p_inv);
  }

  Int modulus() const noexcept { return m_; }
  std::size_t ambient_dimension() const noexcept { return n_; }
  const std::vector<Int>& orders() const noexcept { return orders_; }
  std::uint64_t order() const {
    std::uint64_t o = 1;
    for (auto h : orders_) o *= static_cast<std::uint64_t>(h);
    return o;
  }
  std::uint64_t kernel_order() const noexcept { return kernel_size_; }

  AbelianInvariants invariants() const {
    std::vector<std::uint64_t> cyc(orders_.begin(), orders_.end());
    return invariants_from_cyclic_orders(cyc);
  }

  /// True when x satisfies the defining relations (x lies in K).
  bool in_kernel(const Vector& x) const {
    const Vector y = q_inv_.apply(x, m_);
    std::size_t next = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      const bool free = next < kernel_index_.size() && kernel_index_[next] == i;
      const Int step = free ? m_ / kernel_order_[next] : m_;
      if (free) ++next;
      if (y[i] % step != 0) return false;
    }
    return true;
  }

  /// Coordinates of an element of K with respect to the cyclic basis.
  Vector coordinates(const Vector& x) const {
    const Vector c = kernel_coordinates(x);
    Vector out(orders_.size(), 0);
    for (std::size_t k = 0; k < orders_.size(); ++k) {
      const std::size_t j = factor_row_[k];
      Int s = 0;
      for (std::size_t i = 0; i < c.size(); ++i) s = (s + p_(j, i) * c[i]) % m_;
      out[k] = reduce(s, orders_[k]);
    }
    return out;
  }

  /// An element of K representing the given coordinates.
  Vector lift(const Vector& coords) const {
    Vector x(n_, 0);
    for (std::size_t k = 0; k < orders_.size(); ++k) {
      if (coords[k] == 0) continue;
      const std::size_t j = factor_row_[k];
      for (std::size_t i = 0; i < kernel_index_.size(); ++i) {
        const Int weight = reduce(coords[k] * p_inv_(i, j), m_);
        if (weight == 0) continue;
        const Int scale = m_ / kernel_order_[i];
        for (std::size_t row = 0; row < n_; ++row) {
          x[row] = reduce(x[row] + weight * scale % m_ * q_(row, kernel_index_[i]), m_);
        }
      }
    }
    return x;
  }

  Vector representative(std::size_t k) const {
    Vector e(orders_.size(), 0);
    e[k] = 1;
    return lift(e);
  }

 private:
  Vector kernel_coordinates(const Vector& x) const {
    if (x.size() != n_) throw Error(ErrorKind::InvalidArgument, "vector length mismatch");
    Vector xm(x);
    for (auto& v : xm) v = reduce(v, m_);
    const Vector y = q_inv_.apply(xm, m_);
    Vector c(kernel_index_.size(), 0);
    std::size_t next = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (next < kernel_index_.size() && kernel_index_[next] == i) {
        const Int step = m_ / kernel_order_[next];
        if (y[i] % step != 0) throw Error(ErrorKind::InvalidArgument, "vector is not in the kernel");
        c[next] = y[i] / step;
        ++next;
      } else if (y[i] != 0) {
        throw Error(ErrorKind::InvalidArgument, "vector is not in the kernel");
      }
    }
    return c;
  }

  Int m_;
  std::size_t n_;
  std::vector<std::size_t> kernel_index_;
  std::vector<Int> kernel_order_;
  std::uint64_t kernel_size_ = 1;
  Matrix q_, q_inv_;
  std::vector<std::size_t> factor_row_;
  std::vector<Int> orders_;
  Matrix p_, p_inv_;
};

/// |image of A| for A acting on (Z/m)^cols: the product of m / gcd(d, m)
/// over the Smith diagonal.
inline std::uint64_t image_order(const Matrix& a, Int m) {
  auto f = smith_form(row_span_basis(a, m), m, false);
  std::uint64_t o = 1;
  for (Int d : f.diagonal) o *= static_cast<std::uint64_t>(m / gcd_with(d, m));
  return o;
}

}  // namespace grouplab::zmod
