#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "echar/poly.hpp"

namespace echar {

// Binary form sum_i coeffs[i] x1^{d-i} x2^i whose coefficients may depend on
// lambda.
struct BinaryForm {
  std::vector<UnivariatePoly> coeffs;

  BinaryForm() = default;
  explicit BinaryForm(std::vector<UnivariatePoly> c) : coeffs(std::move(c)) {}
  static BinaryForm from_rationals(std::span<const BigRational> c);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const;
  // Every coefficient constant in lambda.
  bool is_scalar() const;
  std::vector<BigRational> scalar_coeffs() const;

  friend BinaryForm operator*(const BinaryForm& f, const BinaryForm& g);
  friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.coeffs == b.coeffs; }
};

BinaryForm scale(const BinaryForm& f, const BigRational& t);
// f(a x1 + b x2, c x1 + d x2)
BinaryForm substitute(const BinaryForm& f, const BigRational& a, const BigRational& b, const BigRational& c,
                      const BigRational& d);
BinaryForm add(const BinaryForm& f, const BinaryForm& g);

// (deg g + deg f) square Sylvester matrix: deg g shifted rows of f followed by
// deg f shifted rows of g.
PolyMatrix sylvester_matrix(const BinaryForm& f, const BinaryForm& g);
// Determinant of sylvester_matrix; normalized so Res(x1^d, x2^e) = 1. Throws
// DomainError when either degree is < 1.
UnivariatePoly sylvester_resultant(const BinaryForm& f, const BinaryForm& g);
BigRational sylvester_resultant(std::span<const BigRational> f, std::span<const BigRational> g);

// Exponent vector.
using Monomial = std::vector<int>;

struct HomogeneousForm {
  int degree = 0;
  std::map<Monomial, BigRational> terms;

  void add_term(const Monomial& exponent, const BigRational& coeff);
  BigRational coeff(const Monomial& exponent) const;
  // Evaluate at a point with exact entries.
  ComplexRational eval(std::span<const ComplexRational> x) const;

  friend bool operator==(const HomogeneousForm& a, const HomogeneousForm& b) {
    return a.degree == b.degree && a.terms == b.terms;
  }
};

HomogeneousForm monomial_form(const Monomial& exponent, const BigRational& coeff = BigRational(1));
HomogeneousForm operator*(const HomogeneousForm& f, const HomogeneousForm& g);
HomogeneousForm scale(const HomogeneousForm& f, const BigRational& t);
// f + g; throws DomainError on a degree mismatch (unless one side is empty).
HomogeneousForm add(const HomogeneousForm& f, const HomogeneousForm& g);
// f(L y) where (L y)_i = sum_j rows[i][j] y_j.
HomogeneousForm substitute(const HomogeneousForm& f, const std::vector<std::vector<BigRational>>& rows);
// Adds a trailing variable with exponent 0 to every term.
HomogeneousForm append_variable(const HomogeneousForm& f);

struct HomogeneousSystem {
  int variables = 0;
  std::vector<HomogeneousForm> forms;

  // Throws DomainError/DimensionError if the shape is inconsistent.
  void validate() const;
};

struct MacaulayLimits {
  int max_variables = 4;
  std::size_t max_matrix_dim = 500;
  // false: go straight to the perturbation when the minor vanishes.
  bool retry_coordinates = true;
};

// How the last macaulay_resultant call resolved a vanishing extraneous minor.
enum class MacaulayPath { direct, reordered, transformed, perturbed };

// Canonical resultant of k forms in k variables, normalized so that
// Res(x1^d1, ..., xk^dk) = 1. Computed as det(M)/det(M') on the Macaulay
// matrix; if the extraneous minor vanishes, retries over variable orderings
// and a few determinant-one substitutions, then perturbs F_i + t x_i^{d_i} and
// takes the value at t = 0. Throws UnsupportedError past the limits.
BigRational macaulay_resultant(const HomogeneousSystem& s, const MacaulayLimits& limits = {},
                               MacaulayPath* path = nullptr);

std::size_t macaulay_matrix_dim(const HomogeneousSystem& s);

}  // namespace echar
