#include "echar/tensor.hpp"

#include <string>

#include "echar/errors.hpp"

namespace echar {

Hypermatrix::Hypermatrix(int order, int dim) : order_(order), dim_(dim) {
  if (order < 2) throw DomainError("hypermatrix order must be >= 2");
  if (dim < 1) throw DomainError("hypermatrix dimension must be >= 1");
}

Hypermatrix Hypermatrix::diagonal(int order, int dim, const BigRational& value) {
  Hypermatrix a(order, dim);
  for (int i = 0; i < dim; ++i) a.set(MultiIndex(static_cast<std::size_t>(order), i), value);
  return a;
}

void Hypermatrix::check_index(const MultiIndex& index) const {
  if (static_cast<int>(index.size()) != order_) {
    throw DimensionError("index has " + std::to_string(index.size()) + " components, expected " + std::to_string(order_));
  }
  for (int i : index) {
    if (i < 0 || i >= dim_) throw DimensionError("index component out of range");
  }
}

void Hypermatrix::set(const MultiIndex& index, const BigRational& value) {
  check_index(index);
  if (sgn(value) == 0) {
    entries_.erase(index);
  } else {
    entries_[index] = value;
  }
}

void Hypermatrix::add(const MultiIndex& index, const BigRational& value) {
  check_index(index);
  auto it = entries_.find(index);
  if (it == entries_.end()) {
    if (sgn(value) != 0) entries_.emplace(index, value);
    return;
  }
  it->second += value;
  if (sgn(it->second) == 0) entries_.erase(it);
}

BigRational Hypermatrix::at(const MultiIndex& index) const {
  check_index(index);
  auto it = entries_.find(index);
  return it == entries_.end() ? BigRational(0) : it->second;
}

Hypermatrix Hypermatrix::scaled(const BigRational& t) const {
  Hypermatrix out(order_, dim_);
  if (sgn(t) == 0) return out;
  for (const auto& [idx, v] : entries_) out.entries_.emplace(idx, v * t);
  return out;
}

namespace {

template <typename T>
std::vector<T> eval_map_impl(const Hypermatrix& a, std::span<const T> x) {
  if (static_cast<int>(x.size()) != a.dim()) {
    throw DimensionError("vector length " + std::to_string(x.size()) + " does not match dimension " + std::to_string(a.dim()));
  }
  std::vector<T> out(x.size());
  for (const auto& [idx, v] : a.entries()) {
    T term(v);
    for (std::size_t k = 1; k < idx.size(); ++k) term *= x[static_cast<std::size_t>(idx[k])];
    out[static_cast<std::size_t>(idx[0])] += term;
  }
  return out;
}

template <typename T>
std::vector<T> apply_impl(const std::vector<std::vector<BigRational>>& rows, std::span<const T> x) {
  if (x.size() != rows.size()) throw DimensionError("matrix/vector size mismatch");
  std::vector<T> out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) out[i] += T(rows[i][j]) * x[j];
  }
  return out;
}

using Rows = std::vector<std::vector<BigRational>>;

Rows identity_rows(int n) {
  Rows r(static_cast<std::size_t>(n), std::vector<BigRational>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return r;
}

Rows multiply(const Rows& a, const Rows& b) {
  const std::size_t n = a.size();
  Rows out(n, std::vector<BigRational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

// Gauss-Jordan inverse; the caller guarantees invertibility.
Rows inverse(Rows a) {
  const std::size_t n = a.size();
  Rows inv = identity_rows(static_cast<int>(n));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && sgn(a[p][col]) == 0) ++p;
    if (p == n) throw DomainError("singular matrix");
    std::swap(a[p], a[col]);
    std::swap(inv[p], inv[col]);
    BigRational piv = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= piv;
      inv[col][j] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      BigRational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

std::vector<ComplexRational> eval_map(const Hypermatrix& a, std::span<const ComplexRational> x) {
  return eval_map_impl<ComplexRational>(a, x);
}

std::vector<BigRational> eval_map(const Hypermatrix& a, std::span<const BigRational> x) {
  return eval_map_impl<BigRational>(a, x);
}

OrthogonalMatrix OrthogonalMatrix::identity(int dim) { return OrthogonalMatrix(identity_rows(dim)); }

OrthogonalMatrix OrthogonalMatrix::from_rows(std::vector<std::vector<BigRational>> rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw DomainError("empty orthogonal matrix");
  for (const auto& r : rows) {
    if (r.size() != n) throw DimensionError("orthogonal matrix must be square");
  }
  // C^T C = I
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      BigRational dot(0);
      for (std::size_t k = 0; k < n; ++k) dot += rows[k][i] * rows[k][j];
      if (dot != (i == j ? 1 : 0)) throw DomainError("matrix is not exactly orthogonal");
    }
  }
  return OrthogonalMatrix(std::move(rows));
}

OrthogonalMatrix OrthogonalMatrix::rotation2(const BigRational& c, const BigRational& s) {
  return from_rows({{c, s}, {-s, c}});
}

OrthogonalMatrix OrthogonalMatrix::reflection(int dim, int axis) {
  if (axis < 0 || axis >= dim) throw DimensionError("reflection axis out of range");
  Rows r = identity_rows(dim);
  r[static_cast<std::size_t>(axis)][static_cast<std::size_t>(axis)] = -1;
  return OrthogonalMatrix(std::move(r));
}

OrthogonalMatrix OrthogonalMatrix::cayley(int dim, std::span<const BigRational> upper) {
  const auto n = static_cast<std::size_t>(dim);
  if (upper.size() != n * (n - 1) / 2) throw DimensionError("cayley: wrong number of skew entries");
  Rows s(n, std::vector<BigRational>(n));
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      s[i][j] = upper[k];
      s[j][i] = -upper[k];
      ++k;
    }
  }
  Rows minus = identity_rows(dim);
  Rows plus = identity_rows(dim);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      minus[i][j] -= s[i][j];
      plus[i][j] += s[i][j];
    }
  }
  // I + S is invertible for real skew-symmetric S.
  return from_rows(multiply(minus, inverse(plus)));
}

OrthogonalMatrix OrthogonalMatrix::transpose() const {
  const std::size_t n = rows_.size();
  Rows t(n, std::vector<BigRational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[j][i] = rows_[i][j];
  }
  return OrthogonalMatrix(std::move(t));
}

BigRational OrthogonalMatrix::det() const {
  Rows a = rows_;
  const std::size_t n = a.size();
  BigRational result(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && sgn(a[p][col]) == 0) ++p;
    if (p == n) return BigRational(0);
    if (p != col) {
      std::swap(a[p], a[col]);
      result = -result;
    }
    result *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      BigRational f = a[r][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  return result;
}

std::vector<BigRational> OrthogonalMatrix::apply(std::span<const BigRational> x) const {
  return apply_impl<BigRational>(rows_, x);
}

std::vector<ComplexRational> OrthogonalMatrix::apply(std::span<const ComplexRational> x) const {
  return apply_impl<ComplexRational>(rows_, x);
}

OrthogonalMatrix operator*(const OrthogonalMatrix& a, const OrthogonalMatrix& b) {
  if (a.rows_.size() != b.rows_.size()) throw DimensionError("orthogonal matrix product size mismatch");
  return OrthogonalMatrix(multiply(a.rows_, b.rows_));
}

Hypermatrix rotate(const Hypermatrix& a, const OrthogonalMatrix& c) {
  if (c.dim() != a.dim()) throw DimensionError("rotation dimension does not match tensor dimension");
  const auto n = static_cast<std::size_t>(a.dim());
  const auto m = static_cast<std::size_t>(a.order());
  std::size_t total = 1;
  for (std::size_t k = 0; k < m; ++k) total *= n;

  // Dense mixed-radix storage, index i_1 most significant.
  std::vector<BigRational> dense(total);
  for (const auto& [idx, v] : a.entries()) {
    std::size_t flat = 0;
    for (int i : idx) flat = flat * n + static_cast<std::size_t>(i);
    dense[flat] = v;
  }

  // One mode at a time: new(.., i_k, ..) = sum_j C(i_k, j) old(.., j, ..).
  std::vector<BigRational> next(total);
  std::size_t stride = total;
  for (std::size_t mode = 0; mode < m; ++mode) {
    stride /= n;
    for (std::size_t flat = 0; flat < total; ++flat) {
      const std::size_t digit = (flat / stride) % n;
      const std::size_t base = flat - digit * stride;
      BigRational acc(0);
      for (std::size_t j = 0; j < n; ++j) {
        const BigRational& cij = c(static_cast<int>(digit), static_cast<int>(j));
        const BigRational& v = dense[base + j * stride];
        if (sgn(cij) != 0 && sgn(v) != 0) acc += cij * v;
      }
      next[flat] = std::move(acc);
    }
    dense.swap(next);
  }

  Hypermatrix out(a.order(), a.dim());
  MultiIndex idx(m);
  for (std::size_t flat = 0; flat < total; ++flat) {
    if (sgn(dense[flat]) == 0) continue;
    std::size_t rest = flat;
    for (std::size_t k = m; k-- > 0;) {
      idx[k] = static_cast<int>(rest % n);
      rest /= n;
    }
    out.set(idx, dense[flat]);
  }
  return out;
}

SliceCoeffs slices_from(std::vector<BigRational> b, std::vector<BigRational> c) {
  if (b.size() != c.size() || b.empty()) throw DimensionError("slice vectors must have equal nonzero length");
  const std::size_t m = b.size();
  SliceCoeffs s;
  s.d.resize(m);
  for (std::size_t j = 0; j + 1 < m; ++j) s.d[j] = b[j] - c[j + 1];
  s.d[m - 1] = b[m - 1];
  s.e.resize(2 * m - 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) s.e[i + j] += b[i] * c[j];
  }
  s.b = std::move(b);
  s.c = std::move(c);
  return s;
}

SliceCoeffs binary_slices(const Hypermatrix& a) {
  if (a.dim() != 2) throw UnsupportedError("slice coefficients need dimension 2");
  const auto m = static_cast<std::size_t>(a.order());
  std::vector<BigRational> b(m);
  std::vector<BigRational> c(m);
  for (const auto& [idx, v] : a.entries()) {
    std::size_t twos = 0;
    for (std::size_t k = 1; k < idx.size(); ++k) twos += idx[k] == 1 ? 1 : 0;
    (idx[0] == 0 ? b : c)[twos] += v;
  }
  return slices_from(std::move(b), std::move(c));
}

PQSums pq_sums(const SliceCoeffs& s) {
  static constexpr int kSignP[4] = {1, -1, -1, 1};
  static constexpr int kSignQ[4] = {1, 1, -1, -1};
  PQSums out{BigRational(0), BigRational(0)};
  for (std::size_t i = 0; i < s.b.size(); ++i) {
    const bool even = i % 2 == 0;
    const BigRational& for_p = even ? s.b[i] : s.c[i];
    const BigRational& for_q = even ? s.c[i] : s.b[i];
    if (kSignP[i % 4] > 0) out.p += for_p; else out.p -= for_p;
    if (kSignQ[i % 4] > 0) out.q += for_q; else out.q -= for_q;
  }
  return out;
}

}  // namespace echar
