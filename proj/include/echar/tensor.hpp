#pragma once

#include <map>
#include <span>
#include <vector>

#include "echar/rational.hpp"

namespace echar {

// 0-based multi-index (i_1, ..., i_m).
using MultiIndex = std::vector<int>;

// Order-m, dimension-n hypermatrix with exact rational entries. Zero entries
// are not stored.
class Hypermatrix {
 public:
  // order >= 2, dim >= 1; throws DomainError otherwise.
  Hypermatrix(int order, int dim);

  static Hypermatrix diagonal(int order, int dim, const BigRational& value = BigRational(1));

  int order() const { return order_; }
  int dim() const { return dim_; }

  // Throws DimensionError for a malformed index. Setting zero erases.
  void set(const MultiIndex& index, const BigRational& value);
  void add(const MultiIndex& index, const BigRational& value);
  BigRational at(const MultiIndex& index) const;
  const std::map<MultiIndex, BigRational>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  Hypermatrix scaled(const BigRational& t) const;

  friend bool operator==(const Hypermatrix& a, const Hypermatrix& b) {
    return a.order_ == b.order_ && a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  void check_index(const MultiIndex& index) const;

  int order_;
  int dim_;
  std::map<MultiIndex, BigRational> entries_;
};

// x -> A x^{m-1}. Throws DimensionError when x.size() != A.dim().
std::vector<ComplexRational> eval_map(const Hypermatrix& a, std::span<const ComplexRational> x);
std::vector<BigRational> eval_map(const Hypermatrix& a, std::span<const BigRational> x);

// Rational matrix with C^T C = I checked exactly at construction.
class OrthogonalMatrix {
 public:
  static OrthogonalMatrix identity(int dim);
  // Throws DomainError if the rows are not exactly orthonormal.
  static OrthogonalMatrix from_rows(std::vector<std::vector<BigRational>> rows);
  // [[c, s], [-s, c]]; requires c^2 + s^2 = 1.
  static OrthogonalMatrix rotation2(const BigRational& c, const BigRational& s);
  // Diagonal matrix with -1 at the given coordinate.
  static OrthogonalMatrix reflection(int dim, int axis);
  // Cayley transform (I - S)(I + S)^{-1} of a skew-symmetric S given by its
  // strictly upper entries in row-major order; always rational orthogonal.
  static OrthogonalMatrix cayley(int dim, std::span<const BigRational> upper);

  int dim() const { return static_cast<int>(rows_.size()); }
  const BigRational& operator()(int i, int j) const { return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const std::vector<std::vector<BigRational>>& rows() const { return rows_; }

  OrthogonalMatrix transpose() const;
  BigRational det() const;
  std::vector<BigRational> apply(std::span<const BigRational> x) const;
  std::vector<ComplexRational> apply(std::span<const ComplexRational> x) const;

  friend OrthogonalMatrix operator*(const OrthogonalMatrix& a, const OrthogonalMatrix& b);
  friend bool operator==(const OrthogonalMatrix& a, const OrthogonalMatrix& b) { return a.rows_ == b.rows_; }

 private:
  explicit OrthogonalMatrix(std::vector<std::vector<BigRational>> rows) : rows_(std::move(rows)) {}
  std::vector<std::vector<BigRational>> rows_;
};

// Frame change: result(i_1..i_m) = sum_j C(i_1,j_1)...C(i_m,j_m) a(j_1..j_m).
// Throws DimensionError if C.dim() != A.dim().
Hypermatrix rotate(const Hypermatrix& a, const OrthogonalMatrix& c);

// n = 2 slice sums. b[j] sums a(1, i_2..i_m) over index tuples with exactly j
// entries equal to 2 (0-based j here), c[j] likewise for a(2, ...).
// d[j] = b[j] - c[j+1], d[m-1] = b[m-1]; e is the convolution of b and c.
struct SliceCoeffs {
  std::vector<BigRational> b;
  std::vector<BigRational> c;
  std::vector<BigRational> d;
  std::vector<BigRational> e;

  int order() const { return static_cast<int>(b.size()); }
};

// Throws UnsupportedError unless A.dim() == 2.
SliceCoeffs binary_slices(const Hypermatrix& a);
// Builds d and e from b and c.
SliceCoeffs slices_from(std::vector<BigRational> b, std::vector<BigRational> c);

struct PQSums {
  BigRational p;
  BigRational q;
  BigRational sum_of_squares() const { return p * p + q * q; }
};

// P = b1 - c2 - b3 + c4 + b5 - ..., Q = c1 + b2 - c3 - b4 + c5 + ..., first m
// terms each.
PQSums pq_sums(const SliceCoeffs& s);

}  // namespace echar
