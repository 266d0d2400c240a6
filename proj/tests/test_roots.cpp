#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "echar/errors.hpp"
#include "echar/roots.hpp"
#include "oracles.hpp"

using namespace echar;

namespace {

// Sorted by (re, im) for comparison with expected lists.
std::vector<Root> sorted(std::vector<Root> r) {
  std::sort(r.begin(), r.end(), [](const Root& a, const Root& b) {
    if (std::abs(a.value.real() - b.value.real()) > 1e-9) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return r;
}

int total_multiplicity(const std::vector<Root>& roots) {
  int n = 0;
  for (const auto& r : roots) n += r.multiplicity;
  return n;
}

}  // namespace

TEST_CASE("roots of l^2 - 1") {
  const auto r = sorted(complex_roots(UnivariatePoly{-1, 0, 1}));
  REQUIRE(r.size() == 2);
  CHECK(std::abs(r[0].value - std::complex<double>(-1)) < 1e-12);
  CHECK(std::abs(r[1].value - std::complex<double>(1)) < 1e-12);
  CHECK(r[0].multiplicity == 1);
}

TEST_CASE("roots of the m=4 diagonal polynomial") {
  // 4(l - 1)^2 (l - 1/2)^2, checked by expansion first.
  const UnivariatePoly psi{1, -6, 13, -12, 4};
  CHECK(oracle::vieta(BigRational(4), {1, 1, BigRational(1, 2), BigRational(1, 2)}) == psi);
  const auto r = sorted(complex_roots(psi));
  REQUIRE(r.size() == 2);
  CHECK(std::abs(r[0].value - 0.5) < 1e-10);
  CHECK(r[0].multiplicity == 2);
  CHECK(std::abs(r[1].value - 1.0) < 1e-10);
  CHECK(r[1].multiplicity == 2);
}

TEST_CASE("roots of the m=3 diagonal polynomial") {
  // -2 (l^2 - 1)^2 (l^2 - 1/2)
  const UnivariatePoly psi{1, 0, -4, 0, 5, 0, -2};
  CHECK(oracle::vieta_squares(BigRational(-2), {1, 1, BigRational(1, 2)}) == psi);
  const auto r = sorted(complex_roots(psi));
  REQUIRE(r.size() == 4);
  const double s = std::sqrt(0.5);
  CHECK(std::abs(r[0].value + 1.0) < 1e-10);
  CHECK(r[0].multiplicity == 2);
  CHECK(std::abs(r[1].value + s) < 1e-10);
  CHECK(r[1].multiplicity == 1);
  CHECK(std::abs(r[2].value - s) < 1e-10);
  CHECK(std::abs(r[3].value - 1.0) < 1e-10);
  CHECK(r[3].multiplicity == 2);
}

TEST_CASE("complex conjugate roots") {
  const auto r = sorted(complex_roots(UnivariatePoly{5, -2, 1}));  // (l - 1)^2 + 4
  REQUIRE(r.size() == 2);
  CHECK(std::abs(r[0].value - std::complex<double>(1, -2)) < 1e-12);
  CHECK(std::abs(r[1].value - std::complex<double>(1, 2)) < 1e-12);
}

TEST_CASE("multiplicities sum to the degree and residuals are small") {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 40; ++it) {
    UnivariatePoly p = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 10));
    if (p.degree() < 1) continue;
    if (it % 3 == 0) p = p * p;  // force repeated roots
    const auto roots = complex_roots(p);
    CHECK(total_multiplicity(roots) == p.degree());
    const double scale = 1 + max_abs_coeff(p);
    for (const auto& r : roots) {
      const double mag = std::max(1.0, std::pow(std::abs(r.value), p.degree()));
      CHECK(residual(p, r.value) <= kDefaultRootTolerance * scale * mag);
    }
  }
}

TEST_CASE("zero polynomial is rejected") {
  CHECK_THROWS_AS(complex_roots(UnivariatePoly()), DomainError);
  CHECK(complex_roots(UnivariatePoly{3}).empty());
}
