#include <doctest.h>

#include <random>

#include "echar/errors.hpp"
#include "echar/poly.hpp"
#include "oracles.hpp"

using namespace echar;

namespace {

UnivariatePoly lam() { return UnivariatePoly::variable(); }

PolyMatrix random_polymatrix(std::mt19937_64& rng, std::size_t n, int max_degree) {
  PolyMatrix m = PolyMatrix::square(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      m(r, c) = oracle::random_poly(rng, static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1)));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("basic ring operations") {
  const UnivariatePoly p = (lam() + UnivariatePoly{1}) * (lam() - UnivariatePoly{1});
  CHECK(p == UnivariatePoly{-1, 0, 1});
  CHECK(UnivariatePoly{1, -6, 13, -12, 4}.eval(BigRational(1)) == 0);
  CHECK(UnivariatePoly{1, -6, 13, -12, 4}.eval(BigRational(1, 2)) == 0);
  CHECK(UnivariatePoly().degree() == kDegreeMinusInfinity);
  CHECK(UnivariatePoly{0, 0, 0}.is_zero());
  CHECK(UnivariatePoly{3}.degree() == 0);
  CHECK((UnivariatePoly{1, 2} - UnivariatePoly{1, 2}).is_zero());
  CHECK(UnivariatePoly{1, 2, 3}.derivative() == UnivariatePoly{2, 6});
  CHECK(UnivariatePoly{1, 1}.scale_variable(BigRational(3)) == UnivariatePoly{1, 3});
  CHECK(UnivariatePoly{4, -12, 13}.to_string("L") == "13*L^2 - 12*L + 4");
}

TEST_CASE("ring axioms hold exactly on random polynomials") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 50; ++it) {
    const auto a = oracle::random_poly(rng, static_cast<int>(rng() % 6));
    const auto b = oracle::random_poly(rng, static_cast<int>(rng() % 6));
    const auto c = oracle::random_poly(rng, static_cast<int>(rng() % 6));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a - a == UnivariatePoly());
    const auto x = oracle::random_rational(rng);
    CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
  }
}

TEST_CASE("division, gcd and squarefree decomposition") {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 30; ++it) {
    const auto a = oracle::random_poly(rng, 5);
    auto b = oracle::random_poly(rng, 2);
    if (b.is_zero()) continue;
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    CHECK(exact_div(a * b, b) == a);
  }
  CHECK_THROWS(exact_div(UnivariatePoly{1, 0, 1}, UnivariatePoly{1, 1}));
  CHECK_THROWS_AS(divmod(UnivariatePoly{1}, UnivariatePoly()), DomainError);

  const UnivariatePoly f{-1, 1};   // l - 1
  const UnivariatePoly g{1, 0, 1};  // l^2 + 1
  CHECK(gcd(f * f * g, f * UnivariatePoly{2, 3}) == f);
  CHECK(gcd(UnivariatePoly(), UnivariatePoly()).is_zero());

  const UnivariatePoly p = UnivariatePoly(BigRational(-2)) * f * f * f * g * g * UnivariatePoly{3, 1};
  const auto parts = squarefree_decomposition(p);
  UnivariatePoly rebuilt(p.leading());
  for (const auto& [factor, k] : parts) rebuilt = rebuilt * pow(factor, static_cast<unsigned>(k));
  CHECK(rebuilt == p);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].second == 1);
  CHECK(parts[1].second == 2);
  CHECK(parts[2].second == 3);
}

TEST_CASE("interpolation recovers random polynomials") {
  std::mt19937_64 rng(13);
  CHECK(interpolation_nodes(5) == std::vector<BigRational>{0, 1, -1, 2, -2});
  for (int it = 0; it < 20; ++it) {
    const auto p = oracle::random_poly(rng, 8);
    const auto nodes = interpolation_nodes(12);
    std::vector<BigRational> values;
    for (const auto& x : nodes) values.push_back(p.eval(x));
    CHECK(interpolate(nodes, values) == p);
  }
}

TEST_CASE("scalar determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(14);
  for (int it = 0; it < 40; ++it) {
    const std::size_t n = 1 + rng() % 6;
    RationalMatrix m = RationalMatrix::square(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m(r, c) = oracle::random_rational(rng);
    }
    CHECK(det(m) == oracle::cofactor_det(oracle::rows_of(m)));
  }
  RationalMatrix singular = RationalMatrix::square(3);
  for (std::size_t c = 0; c < 3; ++c) {
    singular(0, c) = BigRational(static_cast<long>(c) + 1);
    singular(1, c) = BigRational(2 * (static_cast<long>(c) + 1), 3);
    singular(2, c) = 7;
  }
  CHECK(det(singular) == 0);
}

TEST_CASE("char_poly is det(xI - M)") {
  std::mt19937_64 rng(15);
  for (int it = 0; it < 20; ++it) {
    const std::size_t n = 1 + rng() % 5;
    RationalMatrix m = RationalMatrix::square(n);
    PolyMatrix shifted = PolyMatrix::square(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        m(r, c) = oracle::random_rational(rng);
        shifted(r, c) = UnivariatePoly(-m(r, c));
      }
      shifted(r, r) = shifted(r, r) + lam();
    }
    CHECK(char_poly(m) == oracle::cofactor_det(oracle::rows_of(shifted)));
  }
}

TEST_CASE("polynomial matrix determinants: small cases") {
  PolyMatrix d = PolyMatrix::square(2);
  d(0, 0) = lam();
  d(1, 1) = lam();
  CHECK(polymatrix_det(d) == UnivariatePoly{0, 0, 1});
  PolyMatrix s = PolyMatrix::square(2);
  s(0, 0) = lam();
  s(0, 1) = UnivariatePoly{1};
  s(1, 0) = UnivariatePoly{1};
  s(1, 1) = lam();
  CHECK(polymatrix_det(s) == UnivariatePoly{-1, 0, 1});
  CHECK(polymatrix_det_fraction_free(s) == UnivariatePoly{-1, 0, 1});
  CHECK(det_degree_bound(s) == 2);
  CHECK(polymatrix_det(PolyMatrix::square(3)).is_zero());
}

TEST_CASE("polynomial matrix determinants agree with cofactor expansion") {
  std::mt19937_64 rng(16);
  for (int it = 0; it < 25; ++it) {
    const std::size_t n = 1 + rng() % 6;
    const PolyMatrix m = random_polymatrix(rng, n, 2);
    CHECK(polymatrix_det(m) == oracle::cofactor_det(oracle::rows_of(m)));
  }
}

TEST_CASE("interpolation and fraction-free determinant paths agree") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 50; ++it) {
    const std::size_t n = 1 + rng() % 8;
    const PolyMatrix m = random_polymatrix(rng, n, 2);
    CHECK(polymatrix_det(m) == polymatrix_det_fraction_free(m));
  }
}

TEST_CASE("constant polynomial matrices reduce to the scalar determinant") {
  std::mt19937_64 rng(18);
  for (int it = 0; it < 20; ++it) {
    const std::size_t n = 1 + rng() % 7;
    RationalMatrix r = RationalMatrix::square(n);
    PolyMatrix p = PolyMatrix::square(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        r(i, j) = oracle::random_rational(rng);
        p(i, j) = UnivariatePoly(r(i, j));
      }
    }
    CHECK(polymatrix_det(p) == UnivariatePoly(det(r)));
    CHECK(polymatrix_det_fraction_free(p) == UnivariatePoly(det(r)));
  }
}
