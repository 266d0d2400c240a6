#include "echar/eigen.hpp"

#include <algorithm>
#include <cmath>

#include "echar/errors.hpp"
#include "echar/echar.hpp"
#include "echar/roots.hpp"

namespace echar {

namespace {

using lcplx = std::complex<long double>;

std::vector<lcplx> eval_numeric(const Hypermatrix& a, std::span<const lcplx> x) {
  std::vector<lcplx> out(x.size());
  for (const auto& [idx, v] : a.entries()) {
    lcplx term(static_cast<long double>(v.get_d()));
    for (std::size_t k = 1; k < idx.size(); ++k) term *= x[static_cast<std::size_t>(idx[k])];
    out[static_cast<std::size_t>(idx[0])] += term;
  }
  return out;
}

// Continued-fraction reconstruction with a bounded denominator.
std::optional<BigRational> rationalize(double v, long max_den = 1000000) {
  if (!std::isfinite(v) || std::abs(v) > 1e12) return std::nullopt;
  if (std::abs(v) < 1e-13) return BigRational(0);
  long double x = v;
  BigInt h_prev(1), h(static_cast<long>(std::floor(x)));
  BigInt k_prev(0), k(1);
  long double frac = x - std::floor(x);
  for (int iter = 0; iter < 40 && frac > 1e-15L; ++iter) {
    x = 1.0L / frac;
    auto a = static_cast<long>(std::floor(x));
    frac = x - std::floor(x);
    BigInt h_next = a * h + h_prev;
    BigInt k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return make_rational(h, k);
}

std::optional<ComplexRational> rationalize(std::complex<double> z) {
  auto re = rationalize(z.real());
  auto im = rationalize(z.imag());
  if (!re || !im) return std::nullopt;
  return ComplexRational(*re, *im);
}

ComplexPair to_pair(const ExactPair& e) { return {e[0].to_complex(), e[1].to_complex()}; }

// Polynomials over Q(i), lowest degree first, trimmed.
using GaussPoly = std::vector<ComplexRational>;

void trim(GaussPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

GaussPoly mul(const GaussPoly& a, const GaussPoly& b) {
  if (a.empty() || b.empty()) return {};
  GaussPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

GaussPoly remainder(GaussPoly a, const GaussPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    ComplexRational q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= q * b[j];
    a.pop_back();
    trim(a);
  }
  return a;
}

GaussPoly gcd(GaussPoly a, GaussPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    GaussPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    ComplexRational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

// F(x(t)) for polynomial coordinates x(t).
GaussPoly compose(const HomogeneousForm& f, const std::vector<GaussPoly>& coords) {
  GaussPoly out;
  for (const auto& [mono, c] : f.terms) {
    GaussPoly term{ComplexRational(c)};
    for (std::size_t k = 0; k < mono.size(); ++k) {
      for (int p = 0; p < mono[k]; ++p) term = mul(term, coords[k]);
    }
    if (out.size() < term.size()) out.resize(term.size());
    for (std::size_t j = 0; j < term.size(); ++j) out[j] += term[j];
  }
  trim(out);
  return out;
}

HomogeneousForm isotropic_quadric(int n) {
  HomogeneousForm q;
  q.degree = 2;
  for (int i = 0; i < n; ++i) {
    Monomial e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 2;
    q.add_term(e, BigRational(1));
  }
  return q;
}

std::vector<BigRational> binary_coeffs(const HomogeneousForm& f) {
  std::vector<BigRational> c(static_cast<std::size_t>(f.degree) + 1);
  for (int i = 0; i <= f.degree; ++i) c[static_cast<std::size_t>(i)] = f.coeff({f.degree - i, i});
  return c;
}

}  // namespace

std::string_view to_string(EigenKind k) { return k == EigenKind::normalized ? "normalized" : "deficit"; }

int EigenpairSet::count(EigenKind k) const {
  int total = 0;
  for (const auto& p : pairs) {
    if (p.kind == k) total += p.multiplicity;
  }
  return total;
}

DirectionSet eigen_directions_n2(const Hypermatrix& a) {
  if (a.dim() != 2) throw UnsupportedError("eigenpair enumeration needs dimension 2");
  const int m = a.order();
  SliceCoeffs s = binary_slices(a);
  DirectionSet out;
  out.form.resize(static_cast<std::size_t>(m) + 1);
  out.form[0] = -s.c[0];
  for (std::size_t i = 1; i <= static_cast<std::size_t>(m); ++i) out.form[i] = s.d[i - 1];

  UnivariatePoly p(out.form);  // dehomogenized at x1 = 1, variable t = x2/x1
  if (p.is_zero()) {
    out.infinitely_many = true;
    return out;
  }
  const ComplexRational one(1);
  if (p.degree() < m) {
    out.directions.push_back({{1.0 * 0, 1.0}, m - p.degree(), ExactPair{ComplexRational(0), one}, false});
  }
  const UnivariatePoly isotropic{1, 0, 1};  // 1 + t^2
  int mu = 0;
  for (;;) {
    auto [q, r] = divmod(p, isotropic);
    if (!r.is_zero()) break;
    p = std::move(q);
    ++mu;
  }
  if (mu > 0) {
    for (const ComplexRational& t : {ComplexRational::i(), -ComplexRational::i()}) {
      ExactPair e{one, t};
      out.directions.push_back({to_pair(e), mu, e, true});
    }
  }
  if (p.degree() >= 1) {
    for (const Root& r : complex_roots(p)) {
      Direction d{{1.0, r.value}, r.multiplicity, std::nullopt, false};
      if (auto t = rationalize(r.value); t && p.eval(*t).is_zero()) {
        d.exact = ExactPair{one, *t};
        d.x = to_pair(*d.exact);
      }
      out.directions.push_back(d);
    }
  }
  return out;
}

EigenpairSet eigenpairs_n2(const Hypermatrix& a) {
  DirectionSet ds = eigen_directions_n2(a);
  EigenpairSet out;
  out.infinitely_many = ds.infinitely_many;
  if (ds.infinitely_many) return out;
  const int m = a.order();
  const bool odd = m % 2 == 1;

  for (const Direction& d : ds.directions) {
    Eigenpair pair;
    pair.multiplicity = d.multiplicity;
    pair.exact_direction = d.exact;
    if (d.isotropic) {
      const ExactPair& x = *d.exact;
      auto fx = eval_map(a, std::span<const ComplexRational>(x.data(), 2));
      ComplexRational lambda = fx[0] / x[0];
      pair.kind = EigenKind::deficit;
      pair.x = d.x;
      pair.lambda = lambda.to_complex();
      pair.exact_lambda = lambda;
      out.pairs.push_back(pair);
      continue;
    }

    pair.kind = EigenKind::normalized;
    pair.plus_minus = odd;
    std::array<lcplx, 2> x{lcplx(d.x[0].real(), d.x[0].imag()), lcplx(d.x[1].real(), d.x[1].imag())};
    lcplx root = std::sqrt(x[0] * x[0] + x[1] * x[1]);
    for (auto& v : x) v /= root;
    const std::size_t k = std::abs(x[0]) >= std::abs(x[1]) ? 0 : 1;
    auto fx = eval_numeric(a, x);
    lcplx lambda = fx[k] / x[k];
    pair.x = {std::complex<double>(static_cast<double>(x[0].real()), static_cast<double>(x[0].imag())),
              std::complex<double>(static_cast<double>(x[1].real()), static_cast<double>(x[1].imag()))};
    pair.lambda = {static_cast<double>(lambda.real()), static_cast<double>(lambda.imag())};

    if (d.exact) {
      const ExactPair& e = *d.exact;
      const std::size_t ke = e[0].norm2() >= e[1].norm2() ? 0 : 1;
      auto fe = eval_map(a, std::span<const ComplexRational>(e.data(), 2));
      ComplexRational ratio = fe[ke] / e[ke];
      ComplexRational norm = e[0] * e[0] + e[1] * e[1];
      if (odd) {
        pair.exact_lambda_squared = ratio * ratio / pow(norm, static_cast<unsigned>(m - 2));
      } else {
        pair.exact_lambda = ratio / pow(norm, static_cast<unsigned>((m - 2) / 2));
        pair.lambda = pair.exact_lambda->to_complex();
      }
    }
    out.pairs.push_back(pair);
  }
  return out;
}

std::vector<Eigenpair> z_eigenpairs(const Hypermatrix& a, double imag_tol) {
  std::vector<Eigenpair> out;
  const bool odd = a.order() % 2 == 1;
  for (Eigenpair p : eigenpairs_n2(a).pairs) {
    if (p.kind != EigenKind::normalized) continue;
    if (std::abs(p.lambda.imag()) > imag_tol) continue;
    if (std::abs(p.x[0].imag()) > imag_tol || std::abs(p.x[1].imag()) > imag_tol) continue;
    p.lambda = p.lambda.real();
    p.x = {p.x[0].real(), p.x[1].real()};
    if (odd && p.lambda.real() < 0) {
      p.lambda = -p.lambda;
      p.x = {-p.x[0], -p.x[1]};
    }
    out.push_back(p);
  }
  return out;
}

RegularityReport is_regular(const Hypermatrix& a, const MacaulayLimits& limits) {
  const int n = a.dim();
  RegularityReport report;
  if (n == 1) return report;  // x^2 = 0 forces x = 0
  if (n > 3) throw UnsupportedError("regularity test supports n <= 3");

  const auto forms = tensor_forms(a);
  const HomogeneousForm quadric = isotropic_quadric(n);

  if (n == 2) {
    const std::vector<BigRational> q{BigRational(1), BigRational(0), BigRational(1)};
    report.deltas.push_back(sylvester_resultant(binary_coeffs(forms[1]), q));
    report.deltas.push_back(sylvester_resultant(binary_coeffs(forms[0]), q));
    for (const ComplexRational& t : {ComplexRational::i(), -ComplexRational::i()}) {
      std::vector<ComplexRational> x{ComplexRational(1), t};
      auto fx = eval_map(a, std::span<const ComplexRational>(x));
      if (fx[0].is_zero() && fx[1].is_zero()) {
        report.regular = false;
        report.exact_witness = x;
        report.witness = std::vector<std::complex<double>>{x[0].to_complex(), x[1].to_complex()};
        break;
      }
    }
    return report;
  }

  // n = 3
  for (int i = 0; i < 3; ++i) {
    HomogeneousSystem sys;
    sys.variables = 3;
    for (int j = 0; j < 3; ++j) {
      if (j != i) sys.forms.push_back(forms[static_cast<std::size_t>(j)]);
    }
    sys.forms.push_back(quadric);
    report.deltas.push_back(macaulay_resultant(sys, limits));
  }
  if (std::any_of(report.deltas.begin(), report.deltas.end(), [](const BigRational& d) { return sgn(d) != 0; })) {
    return report;
  }

  // Every point of x^T x = 0 is (t^2 - 1, i(t^2 + 1), 2t) for some t, or (1, i, 0).
  const ComplexRational i1 = ComplexRational::i();
  auto witness_at = [&](const std::vector<ComplexRational>& x) {
    report.regular = false;
    report.exact_witness = x;
    report.witness = std::vector<std::complex<double>>{x[0].to_complex(), x[1].to_complex(), x[2].to_complex()};
  };
  {
    std::vector<ComplexRational> at_infinity{ComplexRational(1), i1, ComplexRational(0)};
    if (std::all_of(forms.begin(), forms.end(), [&](const HomogeneousForm& f) { return f.eval(at_infinity).is_zero(); })) {
      witness_at(at_infinity);
      return report;
    }
  }
  const std::vector<GaussPoly> coords{
      {ComplexRational(-1), ComplexRational(0), ComplexRational(1)},
      {i1, ComplexRational(0), i1},
      {ComplexRational(0), ComplexRational(2)},
  };
  GaussPoly g;
  for (const auto& f : forms) g = gcd(g, compose(f, coords));
  auto point_at = [&](const ComplexRational& t) {
    return std::vector<ComplexRational>{t * t - 1, i1 * (t * t + 1), ComplexRational(2) * t};
  };
  if (g.empty()) {  // all forms vanish on the whole conic
    witness_at(point_at(ComplexRational(0)));
    return report;
  }
  if (g.size() == 2) {
    witness_at(point_at(-g[0] / g[1]));
    return report;
  }
  if (g.size() > 2) {
    std::vector<lcplx> c;
    for (const auto& v : g) c.emplace_back(static_cast<long double>(v.re.get_d()), static_cast<long double>(v.im.get_d()));
    const std::complex<double> t = numeric_roots(c).front();
    if (auto te = rationalize(t); te && std::all_of(forms.begin(), forms.end(), [&](const HomogeneousForm& f) {
          return f.eval(point_at(*te)).is_zero();
        })) {
      witness_at(point_at(*te));
      return report;
    }
    const lcplx tl(t.real(), t.imag());
    const lcplx il(0, 1);
    std::vector<lcplx> x{tl * tl - 1.0L, il * (tl * tl + 1.0L), 2.0L * tl};
    const long double norm = std::max({std::abs(x[0]), std::abs(x[1]), std::abs(x[2])});
    for (auto& v : x) v /= norm;
    report.regular = false;
    report.witness = std::vector<std::complex<double>>{};
    for (const auto& v : x) report.witness->emplace_back(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  }
  return report;
}

DeficitIndicator deficit_indicator(const Hypermatrix& a) {
  DeficitIndicator d;
  d.value = pq_sums(binary_slices(a)).sum_of_squares();
  d.has_deficit = sgn(d.value) == 0;
  return d;
}

double eigen_residual(const Hypermatrix& a, const ComplexPair& x, std::complex<double> lambda) {
  std::array<lcplx, 2> xl{lcplx(x[0].real(), x[0].imag()), lcplx(x[1].real(), x[1].imag())};
  auto fx = eval_numeric(a, xl);
  const lcplx ll(lambda.real(), lambda.imag());
  double worst = 0;
  for (std::size_t i = 0; i < 2; ++i) worst = std::max(worst, static_cast<double>(std::abs(fx[i] - ll * xl[i])));
  return worst;
}

}  // namespace echar
