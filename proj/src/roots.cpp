#include "echar/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "echar/errors.hpp"

namespace echar {

namespace {

using cplx = std::complex<long double>;

// Highest-degree-first Horner evaluation of p and p'.
void horner(const std::vector<cplx>& c, cplx z, cplx& p, cplx& dp) {
  p = c.back();
  dp = 0;
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[k];
  }
}

// c is monic, lowest degree first.
std::vector<cplx> aberth(const std::vector<cplx>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  if (n < 1) return {};
  if (n == 1) return {-c[0]};

  // Fujiwara bound for the starting circle.
  long double radius = 0;
  for (int k = 0; k < n; ++k) {
    long double v = std::pow(std::abs(c[static_cast<std::size_t>(k)]), 1.0L / static_cast<long double>(n - k));
    radius = std::max(radius, v);
  }
  radius = std::max(2 * radius, 1e-6L);

  std::vector<cplx> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    long double angle = 2 * std::numbers::pi_v<long double> * (k + 0.25L) / n + 0.4L;
    z[static_cast<std::size_t>(k)] = std::polar(radius * (0.5L + 0.5L * (k + 1) / n), angle);
  }

  for (int iter = 0; iter < 1000; ++iter) {
    long double max_step = 0;
    for (std::size_t k = 0; k < z.size(); ++k) {
      cplx p, dp;
      horner(c, z[k], p, dp);
      if (p == cplx(0)) continue;
      cplx ratio = p / dp;
      cplx sum = 0;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != k) sum += 1.0L / (z[k] - z[j]);
      }
      cplx step = ratio / (1.0L - ratio * sum);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) step = ratio;
      z[k] -= step;
      max_step = std::max(max_step, std::abs(step) / std::max(1.0L, std::abs(z[k])));
    }
    if (max_step < 1e-17L) break;
  }

  // Newton polish; simple roots converge quadratically.
  for (auto& r : z) {
    for (int k = 0; k < 5; ++k) {
      cplx p, dp;
      horner(c, r, p, dp);
      if (dp == cplx(0)) break;
      r -= p / dp;
    }
  }
  return z;
}

std::vector<cplx> aberth(const UnivariatePoly& f) {
  std::vector<cplx> c;
  c.reserve(static_cast<std::size_t>(f.degree()) + 1);
  const BigRational inv_lead = 1 / f.leading();
  for (const auto& x : f.coeffs()) c.emplace_back(static_cast<long double>(BigRational(x * inv_lead).get_d()));
  return aberth(c);
}

}  // namespace

std::vector<std::complex<double>> numeric_roots(std::span<const std::complex<long double>> coeffs) {
  std::size_t top = coeffs.size();
  while (top > 0 && coeffs[top - 1] == std::complex<long double>(0)) --top;
  if (top == 0) throw DomainError("numeric_roots of the zero polynomial");
  std::vector<cplx> c(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(top));
  const cplx lead = c.back();
  for (auto& x : c) x /= lead;
  std::vector<std::complex<double>> out;
  for (const auto& z : aberth(c)) out.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  return out;
}

double max_abs_coeff(const UnivariatePoly& p) {
  double m = 0;
  for (const auto& c : p.coeffs()) m = std::max(m, std::abs(c.get_d()));
  return m;
}

double residual(const UnivariatePoly& p, std::complex<double> z) {
  std::complex<long double> acc = 0;
  std::complex<long double> zz(z.real(), z.imag());
  for (int k = p.degree(); k >= 0; --k) acc = acc * zz + static_cast<long double>(p.coeff(static_cast<std::size_t>(k)).get_d());
  return static_cast<double>(std::abs(acc));
}

std::vector<Root> complex_roots(const UnivariatePoly& p, double tol) {
  if (p.is_zero()) throw DomainError("complex_roots of the zero polynomial");
  std::vector<Root> roots;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    for (const auto& z : aberth(factor)) {
      roots.push_back({{static_cast<double>(z.real()), static_cast<double>(z.imag())}, mult});
    }
  }
  // Merge numerically coincident roots from different factors.
  std::vector<Root> merged;
  for (const auto& r : roots) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const Root& m) { return std::abs(m.value - r.value) <= tol; });
    if (it == merged.end()) {
      merged.push_back(r);
    } else {
      it->multiplicity += r.multiplicity;
    }
  }
  std::sort(merged.begin(), merged.end(), [](const Root& a, const Root& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return merged;
}

}  // namespace echar
