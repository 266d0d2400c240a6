#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string_view>
#include <vector>

#include "echar/rational.hpp"
#include "echar/resultant.hpp"
#include "echar/tensor.hpp"

namespace echar {

using ComplexPair = std::array<std::complex<double>, 2>;
using ExactPair = std::array<ComplexRational, 2>;

// Projective root of the direction form x2 (A x^{m-1})_1 - x1 (A x^{m-1})_2.
struct Direction {
  ComplexPair x;
  int multiplicity = 1;
  std::optional<ExactPair> exact;
  // x^T x = 0, i.e. proportional to (1, +-i).
  bool isotropic = false;
};

struct DirectionSet {
  // The direction form vanishes identically.
  bool infinitely_many = false;
  std::vector<BigRational> form;  // coefficient of x1^{m-i} x2^i
  std::vector<Direction> directions;
};

DirectionSet eigen_directions_n2(const Hypermatrix& a);

enum class EigenKind { normalized, deficit };
std::string_view to_string(EigenKind k);

// One eigenpair equivalence class. Normalized classes have x^T x = 1; for odd
// m the class stands for both (lambda, x) and (-lambda, -x). Deficit classes
// keep the unnormalized direction (1, +-i).
struct Eigenpair {
  std::complex<double> lambda;
  ComplexPair x;
  EigenKind kind = EigenKind::normalized;
  int multiplicity = 1;
  bool plus_minus = false;
  std::optional<ExactPair> exact_direction;
  // Exact lambda when it lies in Q(i): deficit classes, and normalized classes
  // of even order with an exact direction.
  std::optional<ComplexRational> exact_lambda;
  // Exact lambda^2 for odd-order normalized classes with an exact direction.
  std::optional<ComplexRational> exact_lambda_squared;
};

struct EigenpairSet {
  bool infinitely_many = false;
  std::vector<Eigenpair> pairs;

  int count(EigenKind k) const;  // with multiplicity
  int class_count() const { return count(EigenKind::normalized) + count(EigenKind::deficit); }
};

EigenpairSet eigenpairs_n2(const Hypermatrix& a);

// Real normalized eigenpairs. For odd m the representative with lambda >= 0
// is reported.
std::vector<Eigenpair> z_eigenpairs(const Hypermatrix& a, double imag_tol = 1e-10);

struct RegularityReport {
  bool regular = true;
  std::optional<std::vector<std::complex<double>>> witness;
  std::optional<std::vector<ComplexRational>> exact_witness;
  // Res of (the forms other than F_i, x^T x), one per i.
  std::vector<BigRational> deltas;
};

// n = 1, 2 exact; n = 3 through Delta_i and an exact gcd along the conic
// x^T x = 0. Throws UnsupportedError for n > 3.
RegularityReport is_regular(const Hypermatrix& a, const MacaulayLimits& limits = {});

struct DeficitIndicator {
  BigRational value;  // P_m^2 + Q_m^2
  bool has_deficit = false;
};

DeficitIndicator deficit_indicator(const Hypermatrix& a);

// Max |(A x^{m-1})_i - lambda x_i| in floating point.
double eigen_residual(const Hypermatrix& a, const ComplexPair& x, std::complex<double> lambda);

}  // namespace echar
