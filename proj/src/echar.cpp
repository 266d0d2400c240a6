#include "echar/echar.hpp"

#include <string>

#include "echar/eigen.hpp"
#include "echar/errors.hpp"
#include "parallel.hpp"

namespace echar {

std::string_view to_string(Route r) {
  switch (r) {
    case Route::sylvester_direct: return "sylvester-direct";
    case Route::m1_det: return "M1-det";
    case Route::m2_det: return "M2-det";
    case Route::macaulay: return "macaulay";
  }
  return "unknown";
}

RouteChoice parse_route_choice(std::string_view text) {
  if (text == "auto") return RouteChoice::automatic;
  if (text == "sylvester") return RouteChoice::sylvester;
  if (text == "det") return RouteChoice::det;
  if (text == "macaulay") return RouteChoice::macaulay;
  throw ParseError("unknown route '" + std::string(text) + "'");
}

std::optional<bool> EcharResult::leading_matches() const {
  if (!leading_predicted) return std::nullopt;
  return top_coefficient() == *leading_predicted;
}

int h_bound(int m, int n) {
  if (m < 3) throw DomainError("h(m, n) needs m >= 3");
  if (n < 1) throw DomainError("h(m, n) needs n >= 1");
  return generic_degree(m, n);
}

int generic_degree(int m, int n) {
  int total = 0;
  int power = 1;
  for (int i = 0; i < n; ++i) {
    total += power;
    power *= m - 1;
  }
  return total;
}

int psi_total_degree(int m, int n) {
  int power = 1;
  for (int i = 0; i + 1 < n; ++i) power *= m - 1;
  return (m % 2 == 0 ? 1 : 2) * n * power;
}

std::vector<HomogeneousForm> tensor_forms(const Hypermatrix& a) {
  const auto n = static_cast<std::size_t>(a.dim());
  std::vector<HomogeneousForm> forms(n);
  for (auto& f : forms) f.degree = a.order() - 1;
  for (const auto& [idx, v] : a.entries()) {
    Monomial e(n, 0);
    for (std::size_t k = 1; k < idx.size(); ++k) ++e[static_cast<std::size_t>(idx[k])];
    forms[static_cast<std::size_t>(idx[0])].add_term(e, v);
  }
  return forms;
}

namespace {

BinaryForm binary_from_slice(const std::vector<BigRational>& v) { return BinaryForm::from_rationals(v); }

HomogeneousForm sum_of_squares(std::size_t vars, std::size_t count) {
  HomogeneousForm q;
  q.degree = 2;
  for (std::size_t i = 0; i < count; ++i) {
    Monomial e(vars, 0);
    e[i] = 2;
    q.add_term(e, BigRational(1));
  }
  return q;
}

HomogeneousForm form_power(const HomogeneousForm& f, int p, std::size_t vars) {
  HomogeneousForm out = monomial_form(Monomial(vars, 0));
  for (int k = 0; k < p; ++k) out = out * f;
  return out;
}

void attach_predictions(EcharResult& r, const Hypermatrix& a, const MacaulayLimits& limits) {
  r.order = a.order();
  r.dim = a.dim();
  r.h_bound = generic_degree(a.order(), a.dim());
  r.a0_predicted = a0_predicted(a, limits);
  if (a.dim() == 2) r.leading_predicted = leading_predicted(a);
}

void require_binary(const Hypermatrix& a, bool even) {
  if (a.dim() != 2) throw UnsupportedError("this route needs dimension 2");
  if ((a.order() % 2 == 0) != even) {
    throw UnsupportedError(even ? "this route needs even order" : "this route needs odd order");
  }
}

// Evaluate-interpolate a resultant that is a polynomial in lambda of degree
// at most `bound`.
template <typename SystemAt>
UnivariatePoly interpolate_resultant(int bound, SystemAt&& system_at, const MacaulayLimits& limits) {
  auto nodes = interpolation_nodes(static_cast<std::size_t>(bound) + 1);
  // Fail fast on size before spawning work.
  macaulay_resultant(system_at(BigRational(0)), limits);
  std::vector<BigRational> values(nodes.size());
  detail::parallel_for(nodes.size(), [&](std::size_t i) { values[i] = macaulay_resultant(system_at(nodes[i]), limits); });
  return interpolate(nodes, values);
}

}  // namespace

BigRational map_resultant(const Hypermatrix& a, const MacaulayLimits& limits) {
  if (a.dim() == 2) {
    SliceCoeffs s = binary_slices(a);
    return sylvester_resultant(s.b, s.c);
  }
  HomogeneousSystem sys{a.dim(), tensor_forms(a)};
  return macaulay_resultant(sys, limits);
}

BigRational a0_predicted(const Hypermatrix& a, const MacaulayLimits& limits) {
  BigRational r = map_resultant(a, limits);
  return a.order() % 2 == 0 ? r : r * r;
}

BigRational leading_predicted(const Hypermatrix& a) {
  if (a.dim() != 2) throw UnsupportedError("leading coefficient formula needs dimension 2");
  const int m = a.order();
  BigRational s = pq_sums(binary_slices(a)).sum_of_squares();
  if (m % 2 == 0) return pow(s, static_cast<unsigned>((m - 2) / 2));
  return -pow(s, static_cast<unsigned>(m - 2));
}

std::pair<BinaryForm, BinaryForm> even_eigen_forms(const SliceCoeffs& s) {
  const int m = s.order();
  if (m % 2 != 0) throw DomainError("even_eigen_forms needs even order");
  const auto k = static_cast<unsigned>((m - 2) / 2);
  BinaryForm f1 = binary_from_slice(s.b);
  BinaryForm f2 = binary_from_slice(s.c);
  // lambda (x1^2 + x2^2)^k x1 lands on even slots, ... x2 on odd slots.
  for (unsigned j = 0; j <= k; ++j) {
    UnivariatePoly shift = UnivariatePoly::monomial(BigRational(binomial(k, j)), 1);
    f1.coeffs[2 * j] -= shift;
    f2.coeffs[2 * j + 1] -= shift;
  }
  return {f1, f2};
}

std::pair<BinaryForm, BinaryForm> odd_reduced_forms(const SliceCoeffs& s) {
  const int m = s.order();
  if (m % 2 == 0) throw DomainError("odd_reduced_forms needs odd order");
  const auto k = static_cast<unsigned>(m - 2);
  BinaryForm g1 = binary_from_slice(s.e);
  for (unsigned j = 0; j <= k; ++j) {
    g1.coeffs[2 * j + 1] -= UnivariatePoly::monomial(BigRational(binomial(k, j)), 2);
  }
  std::vector<BigRational> g2(static_cast<std::size_t>(m) + 1);
  g2[0] = -s.c[0];
  for (std::size_t i = 1; i <= static_cast<std::size_t>(m); ++i) g2[i] = s.d[i - 1];
  return {g1, BinaryForm::from_rationals(g2)};
}

PolyMatrix m1_matrix(const SliceCoeffs& s) {
  const auto m = static_cast<std::size_t>(s.order());
  if (m % 2 != 0) throw DomainError("M1 needs even order");
  auto [f1, f2] = even_eigen_forms(s);
  const std::size_t size = 2 * m - 2;
  PolyMatrix out = PolyMatrix::square(size);
  // m-1 shifted rows of (b1-bar, b2, b3-bar, ..., b_m)
  for (std::size_t r = 0; r + 1 < m; ++r) {
    for (std::size_t t = 0; t < m; ++t) out(r, r + t) = f1.coeffs[t];
  }
  // (c1, c2-bar, c3, ..., c_m-bar) starting in column m-1 (1-based)
  for (std::size_t t = 0; t < m; ++t) out(m - 1, m - 2 + t) = f2.coeffs[t];
  // m-2 shifted rows of (-c1, d1, ..., d_{m-1}, b_m)
  for (std::size_t r = 0; r + 2 < m; ++r) {
    out(m + r, r) = UnivariatePoly(-s.c[0]);
    for (std::size_t t = 0; t < m; ++t) out(m + r, r + 1 + t) = UnivariatePoly(s.d[t]);
  }
  return out;
}

PolyMatrix m2_matrix(const SliceCoeffs& s) {
  const auto m = static_cast<std::size_t>(s.order());
  if (m % 2 == 0) throw DomainError("M2 needs odd order");
  auto [g1, g2] = odd_reduced_forms(s);
  PolyMatrix syl = sylvester_matrix(g1, g2);
  const std::size_t n = syl.rows();  // 3m - 2
  const std::size_t first_d_row = m;
  const std::size_t last_row = n - 1;
  // e1 = b1 c1 against -c1: row 1 += b1 * row (m+1).
  for (std::size_t c = 0; c < n; ++c) syl(0, c) += s.b[0] * syl(first_d_row, c);
  // e_{2m-1} = b_m c_m against b_m: row m -= c_m * last row.
  for (std::size_t c = 0; c < n; ++c) syl(m - 1, c) -= s.c[m - 1] * syl(last_row, c);
  PolyMatrix out = PolyMatrix::square(n - 2);
  std::size_t orow = 0;
  for (std::size_t r = 0; r < n; ++r) {
    if (r == first_d_row || r == last_row) continue;
    for (std::size_t c = 1; c + 1 < n; ++c) out(orow, c - 1) = syl(r, c);
    ++orow;
  }
  return out;
}

EcharResult echar_even_n2(const Hypermatrix& a) {
  require_binary(a, true);
  auto [f1, f2] = even_eigen_forms(binary_slices(a));
  EcharResult r;
  r.psi = sylvester_resultant(f1, f2);
  r.route = Route::sylvester_direct;
  attach_predictions(r, a, {});
  return r;
}

EcharResult m1_det(const Hypermatrix& a) {
  require_binary(a, true);
  if (!is_regular(a).regular) throw IrregularTensorError("det(M1) formula needs a regular tensor");
  EcharResult r;
  r.psi = polymatrix_det(m1_matrix(binary_slices(a)));
  r.route = Route::m1_det;
  attach_predictions(r, a, {});
  return r;
}

EcharResult echar_odd_n2(const Hypermatrix& a) {
  require_binary(a, false);
  SliceCoeffs s = binary_slices(a);
  const BigRational factor = s.b.back() * s.c.front();
  if (sgn(factor) == 0) return echar_macaulay(a);
  auto [g1, g2] = odd_reduced_forms(s);
  EcharResult r;
  r.psi = exact_div(sylvester_resultant(g1, g2), factor);
  r.route = Route::sylvester_direct;
  attach_predictions(r, a, {});
  return r;
}

EcharResult m2_det(const Hypermatrix& a) {
  require_binary(a, false);
  EcharResult r;
  r.psi = polymatrix_det(m2_matrix(binary_slices(a)));
  r.route = Route::m2_det;
  attach_predictions(r, a, {});
  return r;
}

UnivariatePoly x0_system_resultant(const Hypermatrix& a, const MacaulayLimits& limits) {
  const auto n = static_cast<std::size_t>(a.dim());
  const int m = a.order();
  std::vector<HomogeneousForm> base;
  for (const auto& f : tensor_forms(a)) base.push_back(append_variable(f));
  HomogeneousForm quadric = sum_of_squares(n + 1, n);
  Monomial x0_sq(n + 1, 0);
  x0_sq[n] = 2;
  quadric.add_term(x0_sq, BigRational(-1));

  auto system_at = [&](const BigRational& lambda) {
    HomogeneousSystem sys;
    sys.variables = static_cast<int>(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
      Monomial e(n + 1, 0);
      e[i] = 1;
      e[n] = m - 2;
      HomogeneousForm f = base[i];
      f.add_term(e, -lambda);
      sys.forms.push_back(std::move(f));
    }
    sys.forms.push_back(quadric);
    return sys;
  };
  // Both parities: degree <= 2 n (m-1)^{n-1} in lambda.
  const int bound = m % 2 == 0 ? 2 * psi_total_degree(m, a.dim()) : psi_total_degree(m, a.dim());
  return interpolate_resultant(bound, system_at, limits);
}

EcharResult echar_macaulay(const Hypermatrix& a, const MacaulayLimits& limits) {
  const int m = a.order();
  EcharResult r;
  r.route = Route::macaulay;
  if (m % 2 == 1) {
    r.psi = x0_system_resultant(a, limits);
  } else {
    const auto n = static_cast<std::size_t>(a.dim());
    const auto forms = tensor_forms(a);
    const HomogeneousForm norm_power = form_power(sum_of_squares(n, n), (m - 2) / 2, n);
    std::vector<HomogeneousForm> shifts;
    for (std::size_t i = 0; i < n; ++i) {
      Monomial e(n, 0);
      e[i] = 1;
      shifts.push_back(norm_power * monomial_form(e));
    }
    auto system_at = [&](const BigRational& lambda) {
      HomogeneousSystem sys;
      sys.variables = static_cast<int>(n);
      for (std::size_t i = 0; i < n; ++i) sys.forms.push_back(add(forms[i], scale(shifts[i], -lambda)));
      return sys;
    };
    r.psi = interpolate_resultant(psi_total_degree(m, a.dim()), system_at, limits);
  }
  attach_predictions(r, a, limits);
  return r;
}

EcharResult compute_echar(const Hypermatrix& a, RouteChoice choice, const MacaulayLimits& limits) {
  const bool even = a.order() % 2 == 0;
  switch (choice) {
    case RouteChoice::automatic:
      if (a.dim() != 2) return echar_macaulay(a, limits);
      return even ? echar_even_n2(a) : echar_odd_n2(a);
    case RouteChoice::sylvester:
      if (a.dim() != 2) throw UnsupportedError("the Sylvester route needs dimension 2");
      return even ? echar_even_n2(a) : echar_odd_n2(a);
    case RouteChoice::det:
      if (a.dim() != 2) throw UnsupportedError("the determinant routes need dimension 2");
      return even ? m1_det(a) : m2_det(a);
    case RouteChoice::macaulay:
      return echar_macaulay(a, limits);
  }
  throw Error("unknown route");
}

}  // namespace echar
