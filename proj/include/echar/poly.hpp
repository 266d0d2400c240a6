#pragma once

#include <climits>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "echar/rational.hpp"

namespace echar {

// Degree reported for the zero polynomial.
inline constexpr int kDegreeMinusInfinity = INT_MIN;

// Dense polynomial in one variable over Q; coeffs()[j] is the coefficient of
// lambda^j. The highest stored coefficient is never zero.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<BigRational> coeffs);
  UnivariatePoly(std::initializer_list<long> coeffs);
  UnivariatePoly(const BigRational& c);  // NOLINT: constants promote implicitly

  static UnivariatePoly monomial(const BigRational& c, unsigned degree);
  static UnivariatePoly variable() { return monomial(BigRational(1), 1); }

  int degree() const { return coeffs_.empty() ? kDegreeMinusInfinity : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const BigRational> coeffs() const { return coeffs_; }
  // Coefficient of lambda^j; zero past the degree.
  const BigRational& coeff(std::size_t j) const;
  const BigRational& leading() const { return coeff(coeffs_.empty() ? 0 : coeffs_.size() - 1); }

  BigRational eval(const BigRational& x) const;
  ComplexRational eval(const ComplexRational& x) const;
  UnivariatePoly derivative() const;
  // p(t * lambda)
  UnivariatePoly scale_variable(const BigRational& t) const;

  UnivariatePoly& operator+=(const UnivariatePoly& o);
  UnivariatePoly& operator-=(const UnivariatePoly& o);
  UnivariatePoly& operator*=(const UnivariatePoly& o);
  UnivariatePoly& operator*=(const BigRational& c);

  friend UnivariatePoly operator+(UnivariatePoly a, const UnivariatePoly& b) { return a += b; }
  friend UnivariatePoly operator-(UnivariatePoly a, const UnivariatePoly& b) { return a -= b; }
  friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
  friend UnivariatePoly operator*(UnivariatePoly a, const BigRational& c) { return a *= c; }
  friend UnivariatePoly operator*(const BigRational& c, UnivariatePoly a) { return a *= c; }
  friend UnivariatePoly operator-(UnivariatePoly a);
  friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

UnivariatePoly pow(const UnivariatePoly& p, unsigned exponent);

// Euclidean division; throws DomainError when the divisor is zero.
std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& num, const UnivariatePoly& den);
// Division that must be exact; a nonzero remainder throws Error.
UnivariatePoly exact_div(const UnivariatePoly& num, const UnivariatePoly& den);
UnivariatePoly exact_div(const UnivariatePoly& num, const BigRational& den);

// Monic gcd; gcd(0, 0) = 0.
UnivariatePoly gcd(const UnivariatePoly& a, const UnivariatePoly& b);
UnivariatePoly make_monic(const UnivariatePoly& p);

// Yun's algorithm: p = lc * prod f_k^k with the f_k squarefree, monic and
// pairwise coprime. Only factors with positive degree are returned.
std::vector<std::pair<UnivariatePoly, int>> squarefree_decomposition(const UnivariatePoly& p);

// Interpolation nodes 0, 1, -1, 2, -2, ...
std::vector<BigRational> interpolation_nodes(std::size_t count);
// Newton divided differences; nodes must be distinct.
UnivariatePoly interpolate(std::span<const BigRational> nodes, std::span<const BigRational> values);

// Row-major square or rectangular matrix.
template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static DenseMatrix square(std::size_t n) { return DenseMatrix(n, n); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = DenseMatrix<BigRational>;
using PolyMatrix = DenseMatrix<UnivariatePoly>;

// Fraction-free (Bareiss) elimination after clearing row denominators.
BigRational det(const RationalMatrix& m);

// det(x I - m) via reduction to upper Hessenberg form, exact.
UnivariatePoly char_poly(const RationalMatrix& m);

// Sum over rows of the largest entry degree; bounds deg det(m).
int det_degree_bound(const PolyMatrix& m);
RationalMatrix evaluate(const PolyMatrix& m, const BigRational& x);

// Exact determinant by evaluation at det_degree_bound + 1 nodes and
// interpolation.
UnivariatePoly polymatrix_det(const PolyMatrix& m);
// Exact determinant by Bareiss elimination directly over Q[lambda].
UnivariatePoly polymatrix_det_fraction_free(const PolyMatrix& m);

}  // namespace echar
