#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "echar/poly.hpp"
#include "echar/resultant.hpp"
#include "echar/tensor.hpp"

namespace echar {

enum class Route { sylvester_direct, m1_det, m2_det, macaulay };
std::string_view to_string(Route r);

// What the caller asked for; `automatic` picks the cheapest exact route.
enum class RouteChoice { automatic, sylvester, det, macaulay };
RouteChoice parse_route_choice(std::string_view text);

struct EcharResult {
  UnivariatePoly psi;
  Route route = Route::sylvester_direct;
  int order = 0;
  int dim = 0;
  // Generic degree h(m, n); psi has degree <= h (even m) or <= 2h (odd m).
  int h_bound = 0;
  BigRational a0_predicted;
  // Only defined for n = 2.
  std::optional<BigRational> leading_predicted;

  bool identically_zero() const { return psi.is_zero(); }
  // Power of lambda carrying the generically nonzero top coefficient.
  int top_power() const { return order % 2 == 0 ? h_bound : 2 * h_bound; }
  const BigRational& top_coefficient() const { return psi.coeff(static_cast<std::size_t>(top_power())); }
  bool a0_matches() const { return psi.coeff(0) == a0_predicted; }
  std::optional<bool> leading_matches() const;
};

// ((m-1)^n - 1)/(m - 2); throws DomainError for m < 3.
int h_bound(int m, int n);
// sum_{i<n} (m-1)^i, which equals h_bound for m >= 3 and n for m = 2.
int generic_degree(int m, int n);
// Degree of psi as a form in (entries of A, lambda): n(m-1)^{n-1}, doubled for
// odd m.
int psi_total_degree(int m, int n);

// (A x^{m-1})_i as forms in n variables.
std::vector<HomogeneousForm> tensor_forms(const Hypermatrix& a);
// Res_x(A x^{m-1}); Sylvester for n = 2, Macaulay otherwise.
BigRational map_resultant(const Hypermatrix& a, const MacaulayLimits& limits = {});

// Res(A x^{m-1}) for even m, its square for odd m.
BigRational a0_predicted(const Hypermatrix& a, const MacaulayLimits& limits = {});
// (P^2+Q^2)^{(m-2)/2} for even m, -(P^2+Q^2)^{m-2} for odd m. n = 2 only.
BigRational leading_predicted(const Hypermatrix& a);

// The two binary forms whose Sylvester resultant is psi for even m:
// (A x^{m-1})_i - lambda (x^T x)^{(m-2)/2} x_i.
std::pair<BinaryForm, BinaryForm> even_eigen_forms(const SliceCoeffs& s);
// For odd m: G1 = F1 F2 - lambda^2 (x^T x)^{m-2} x1 x2 and
// G2 = x2 F1 - x1 F2.
std::pair<BinaryForm, BinaryForm> odd_reduced_forms(const SliceCoeffs& s);

// (2m-2) square matrix of the even-order determinantal formula.
PolyMatrix m1_matrix(const SliceCoeffs& s);
// (3m-4) square matrix of the odd-order determinantal formula, obtained from
// the Sylvester matrix of odd_reduced_forms by the two pivot eliminations.
PolyMatrix m2_matrix(const SliceCoeffs& s);

// n = 2, even m: Sylvester resultant of even_eigen_forms.
EcharResult echar_even_n2(const Hypermatrix& a);
// n = 2, even m, regular A: det(M1). Throws IrregularTensorError.
EcharResult m1_det(const Hypermatrix& a);
// n = 2, odd m: Res(G1, G2) / (b_m c_1), Macaulay when b_m c_1 = 0.
EcharResult echar_odd_n2(const Hypermatrix& a);
// n = 2, odd m: det(M2).
EcharResult m2_det(const Hypermatrix& a);
// Any n within the Macaulay caps. Even m eliminates x from
// A x^{m-1} - lambda (x^T x)^{(m-2)/2} x; odd m eliminates (x, x0) from
// {A x^{m-1} - lambda x0^{m-2} x, x^T x - x0^2}. Evaluate-interpolate in
// lambda.
EcharResult echar_macaulay(const Hypermatrix& a, const MacaulayLimits& limits = {});

// Resultant of the x0-homogenized system for any parity of m. For odd m this
// is psi; for even m it equals (-1)^{(m-1)^n} psi^2.
UnivariatePoly x0_system_resultant(const Hypermatrix& a, const MacaulayLimits& limits = {});

// Dispatch by route; throws UnsupportedError if the route does not apply.
EcharResult compute_echar(const Hypermatrix& a, RouteChoice choice = RouteChoice::automatic,
                          const MacaulayLimits& limits = {});

}  // namespace echar
