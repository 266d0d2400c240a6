#pragma once

#include <complex>
#include <span>
#include <vector>

#include "echar/poly.hpp"

namespace echar {

struct Root {
  std::complex<double> value;
  int multiplicity = 1;
};

inline constexpr double kDefaultRootTolerance = 1e-8;

// All complex roots of p with multiplicities summing to deg p. Multiplicities
// come from an exact squarefree decomposition; each squarefree factor is
// solved by Aberth iteration with Newton polishing, and roots closer than tol
// are merged. Throws DomainError for the zero polynomial.
std::vector<Root> complex_roots(const UnivariatePoly& p, double tol = kDefaultRootTolerance);

// Roots of sum_k coeffs[k] z^k (no multiplicity detection).
std::vector<std::complex<double>> numeric_roots(std::span<const std::complex<long double>> coeffs);

// |p(z)| evaluated in floating point.
double residual(const UnivariatePoly& p, std::complex<double> z);
double max_abs_coeff(const UnivariatePoly& p);

}  // namespace echar
