#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "echar/echar.hpp"
#include "echar/eigen.hpp"
#include "echar/errors.hpp"
#include "echar/roots.hpp"
#include "oracles.hpp"

using namespace echar;

namespace {

Hypermatrix deficit_tensor() {
  Hypermatrix a(3, 2);
  a.set({0, 0, 0}, 2);
  a.set({0, 0, 1}, 2);
  a.set({0, 1, 1}, 1);
  a.set({1, 0, 0}, 1);
  a.set({1, 0, 1}, 1);
  a.set({1, 1, 1}, 3);
  return a;
}

Hypermatrix random_tensor(std::mt19937_64& rng, int m, int n) {
  Hypermatrix a(m, n);
  oracle::for_each_index(m, n, [&](const MultiIndex& idx) { a.set(idx, oracle::random_rational(rng)); });
  return a;
}

std::vector<double> sorted_real_lambdas(const std::vector<Eigenpair>& pairs) {
  std::vector<double> out;
  for (const auto& p : pairs) {
    for (int k = 0; k < p.multiplicity; ++k) out.push_back(p.lambda.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::complex<double> dot(const ComplexPair& x) { return x[0] * x[0] + x[1] * x[1]; }

// Projective equality of a numeric direction with an exact one.
bool same_direction(const ComplexPair& x, std::complex<double> y0, std::complex<double> y1) {
  return std::abs(x[0] * y1 - x[1] * y0) < 1e-9;
}

}  // namespace

TEST_CASE("directions: m=4 diagonal") {
  const DirectionSet ds = eigen_directions_n2(Hypermatrix::diagonal(4, 2));
  CHECK(!ds.infinitely_many);
  // x1 x2 (x2^2 - x1^2) -> coefficients of x1^{4-i} x2^i
  CHECK(ds.form == std::vector<BigRational>{0, 1, 0, -1, 0});
  int total = 0;
  for (const auto& d : ds.directions) total += d.multiplicity;
  CHECK(total == 4);
  for (auto [y0, y1] : std::vector<std::pair<double, double>>{{1, 0}, {0, 1}, {1, 1}, {1, -1}}) {
    CHECK(std::any_of(ds.directions.begin(), ds.directions.end(),
                      [&](const Direction& d) { return d.exact && same_direction(d.x, y0, y1); }));
  }
}

TEST_CASE("directions: deficit example") {
  const DirectionSet ds = eigen_directions_n2(deficit_tensor());
  // -(x1 - x2)(x1^2 + x2^2)
  const BinaryForm expect = BinaryForm::from_rationals(std::vector<BigRational>{-1, 1}) *
                            BinaryForm::from_rationals(std::vector<BigRational>{1, 0, 1});
  CHECK(BinaryForm::from_rationals(ds.form) == expect);
  REQUIRE(ds.directions.size() == 3);
  int isotropic = 0;
  for (const auto& d : ds.directions) {
    REQUIRE(d.exact);
    if (d.isotropic) {
      ++isotropic;
      CHECK(std::abs(dot(d.x)) < 1e-15);
    } else {
      CHECK(same_direction(d.x, 1, 1));
    }
  }
  CHECK(isotropic == 2);
}

TEST_CASE("directions: infinitely many") {
  Hypermatrix a(3, 2);
  a.set({0, 0, 0}, 1);
  a.set({1, 0, 1}, 1);
  CHECK(eigen_directions_n2(a).infinitely_many);
  CHECK(eigenpairs_n2(a).infinitely_many);
  CHECK(compute_echar(a).identically_zero());
  CHECK(eigen_directions_n2(Hypermatrix(4, 2)).infinitely_many);
  CHECK_THROWS_AS(eigen_directions_n2(Hypermatrix(3, 3)), UnsupportedError);
}

TEST_CASE("eigenpairs: m=4 diagonal") {
  const Hypermatrix a = Hypermatrix::diagonal(4, 2);
  const EigenpairSet set = eigenpairs_n2(a);
  CHECK(set.count(EigenKind::normalized) == 4);
  CHECK(set.count(EigenKind::deficit) == 0);
  const auto lambdas = sorted_real_lambdas(set.pairs);
  REQUIRE(lambdas.size() == 4);
  CHECK(lambdas[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(lambdas[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(lambdas[2] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(lambdas[3] == doctest::Approx(1.0).epsilon(1e-12));
  for (const auto& p : set.pairs) {
    CHECK(std::abs(dot(p.x) - 1.0) < 1e-12);
    CHECK(eigen_residual(a, p.x, p.lambda) < 1e-12);
    REQUIRE(p.exact_lambda);
    CHECK(p.exact_lambda->is_real());
    CHECK(!p.plus_minus);
  }
}

TEST_CASE("eigenpairs: deficit example") {
  const Hypermatrix a = deficit_tensor();
  const EigenpairSet set = eigenpairs_n2(a);
  CHECK(set.count(EigenKind::normalized) == 1);
  CHECK(set.count(EigenKind::deficit) == 2);
  for (const auto& p : set.pairs) {
    if (p.kind == EigenKind::normalized) {
      CHECK(p.plus_minus);
      CHECK(std::abs(p.lambda - 5 / std::sqrt(2.0)) < 1e-12);
      REQUIRE(p.exact_lambda_squared);
      CHECK(*p.exact_lambda_squared == ComplexRational(BigRational(25, 2)));
      CHECK(std::abs(dot(p.x) - 1.0) < 1e-12);
    } else {
      REQUIRE(p.exact_lambda);
      REQUIRE(p.exact_direction);
      const ExactPair& x = *p.exact_direction;
      // F(x) = lambda x exactly.
      const auto fx = eval_map(a, std::span<const ComplexRational>(x.data(), 2));
      CHECK(fx[0] == *p.exact_lambda * x[0]);
      CHECK(fx[1] == *p.exact_lambda * x[1]);
      CHECK((x[0] * x[0] + x[1] * x[1]).is_zero());
      const bool plus = x[1] == ComplexRational::i();
      CHECK(*p.exact_lambda == ComplexRational(BigRational(1), BigRational(plus ? 2 : -2)));
    }
  }
}

TEST_CASE("eigenpairs: m=3 diagonal matches the roots of psi") {
  const Hypermatrix a = Hypermatrix::diagonal(3, 2);
  const EigenpairSet set = eigenpairs_n2(a);
  CHECK(set.count(EigenKind::normalized) == 3);
  std::vector<double> from_pairs;
  for (const auto& p : set.pairs) {
    CHECK(p.plus_minus);
    from_pairs.push_back(p.lambda.real());
    from_pairs.push_back(-p.lambda.real());
  }
  std::vector<double> from_roots;
  for (const auto& r : complex_roots(compute_echar(a).psi)) {
    for (int k = 0; k < r.multiplicity; ++k) from_roots.push_back(r.value.real());
  }
  std::sort(from_pairs.begin(), from_pairs.end());
  std::sort(from_roots.begin(), from_roots.end());
  REQUIRE(from_pairs.size() == from_roots.size());
  for (std::size_t i = 0; i < from_pairs.size(); ++i) CHECK(std::abs(from_pairs[i] - from_roots[i]) < 1e-8);
}

TEST_CASE("Z-eigenpairs") {
  const auto z4 = z_eigenpairs(Hypermatrix::diagonal(4, 2));
  const auto l4 = sorted_real_lambdas(z4);
  REQUIRE(l4.size() == 4);
  CHECK(l4.back() == doctest::Approx(1.0));
  int at_max = 0;
  for (const auto& p : z4) {
    if (std::abs(p.lambda.real() - 1.0) < 1e-12) {
      ++at_max;
      CHECK((same_direction(p.x, 1, 0) || same_direction(p.x, 0, 1)));
    }
  }
  CHECK(at_max == 2);

  const auto zd = z_eigenpairs(deficit_tensor());
  REQUIRE(zd.size() == 1);
  CHECK(zd[0].lambda.real() == doctest::Approx(5 / std::sqrt(2.0)));
  CHECK(zd[0].lambda.imag() == 0);

  // Even order, real symmetric: never empty.
  std::mt19937_64 rng(61);
  for (int it = 0; it < 10; ++it) {
    Hypermatrix s(4, 2);
    oracle::for_each_index(4, 2, [&](const MultiIndex& idx) {
      MultiIndex key = idx;
      std::sort(key.begin(), key.end());
      if (key == idx) {
        const BigRational v = oracle::random_rational(rng);
        std::vector<int> perm = idx;
        do {
          s.set(perm, v);
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    });
    CHECK(!z_eigenpairs(s).empty());
  }
}

TEST_CASE("regularity for n = 2") {
  Hypermatrix irr(3, 2);
  irr.set({0, 0, 0}, 1);
  irr.set({0, 1, 1}, 1);
  const RegularityReport r = is_regular(irr);
  CHECK(!r.regular);
  REQUIRE(r.exact_witness);
  CHECK((*r.exact_witness)[0] == ComplexRational(1));
  CHECK((*r.exact_witness)[1] == ComplexRational::i());
  const auto fx = eval_map(irr, std::span<const ComplexRational>(*r.exact_witness));
  CHECK(fx[0].is_zero());
  CHECK(fx[1].is_zero());
  CHECK(r.deltas.size() == 2);
  for (const auto& d : r.deltas) CHECK(d == 0);

  const RegularityReport d3 = is_regular(Hypermatrix::diagonal(3, 2));
  CHECK(d3.regular);
  CHECK(!d3.witness);
  CHECK(is_regular(deficit_tensor()).regular);
  Hypermatrix one(3, 1);
  one.set({0, 0, 0}, 1);
  CHECK(is_regular(one).regular);
  CHECK_THROWS_AS(is_regular(Hypermatrix(3, 4)), UnsupportedError);
}

TEST_CASE("regularity for n = 3") {
  const RegularityReport d = is_regular(Hypermatrix::diagonal(3, 3));
  CHECK(d.regular);
  REQUIRE(d.deltas.size() == 3);
  for (const auto& delta : d.deltas) CHECK(delta != 0);

  // Forms x1^2 + x2^2 + x3^2 (times a linear factor) vanish on the conic.
  Hypermatrix exact(3, 3);
  exact.set({0, 0, 0}, 1);
  exact.set({0, 1, 1}, 1);
  exact.set({0, 2, 2}, 1);
  const RegularityReport e = is_regular(exact);
  CHECK(!e.regular);
  REQUIRE(e.exact_witness);
  const auto& w = *e.exact_witness;
  CHECK((w[0] * w[0] + w[1] * w[1] + w[2] * w[2]).is_zero());
  for (const auto& v : eval_map(exact, std::span<const ComplexRational>(w))) CHECK(v.is_zero());

  // Common roots (1, +-3i, +-2 sqrt 2) are irrational: numeric witness.
  Hypermatrix num(3, 3);
  num.set({0, 0, 0}, 9);
  num.set({0, 1, 1}, 1);
  num.set({1, 2, 2}, 1);
  num.set({1, 0, 0}, -8);
  num.set({2, 0, 0}, 1);
  num.set({2, 1, 1}, 1);
  num.set({2, 2, 2}, 1);
  const RegularityReport n = is_regular(num);
  CHECK(!n.regular);
  for (const auto& delta : n.deltas) CHECK(delta == 0);
  REQUIRE(n.witness);
  const auto& x = *n.witness;
  REQUIRE(x.size() == 3);
  CHECK(std::abs(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]) <= 1e-10);
  const std::complex<double> f1 = 9.0 * x[0] * x[0] + x[1] * x[1];
  const std::complex<double> f2 = x[2] * x[2] - 8.0 * x[0] * x[0];
  CHECK(std::abs(f1) <= 1e-10);
  CHECK(std::abs(f2) <= 1e-10);
}

TEST_CASE("deficit indicator") {
  const DeficitIndicator d = deficit_indicator(deficit_tensor());
  CHECK(d.value == 0);
  CHECK(d.has_deficit);
  CHECK(deficit_indicator(Hypermatrix::diagonal(4, 2)).value == 4);
  CHECK(!deficit_indicator(Hypermatrix::diagonal(4, 2)).has_deficit);
  CHECK(deficit_indicator(Hypermatrix::diagonal(3, 2)).value == 2);
}

TEST_CASE("class count, root correspondence and degree drop on random tensors") {
  std::mt19937_64 rng(62);
  for (int m : {3, 4, 5, 6}) {
    for (int it = 0; it < 10; ++it) {
      const Hypermatrix a = random_tensor(rng, m, 2);
      const EigenpairSet set = eigenpairs_n2(a);
      REQUIRE(!set.infinitely_many);
      CHECK(set.class_count() == m);
      const UnivariatePoly psi = compute_echar(a).psi;
      std::vector<std::complex<double>> lambdas;
      for (const auto& p : set.pairs) {
        CHECK(eigen_residual(a, p.x, p.lambda) <= 1e-8 * std::max(1.0, std::abs(p.lambda)));
        if (p.kind != EigenKind::normalized) continue;
        lambdas.push_back(p.lambda);
        if (p.plus_minus) lambdas.push_back(-p.lambda);
      }
      const auto roots = complex_roots(psi);
      int total = 0;
      for (const auto& r : roots) total += r.multiplicity;
      CHECK(total == static_cast<int>(lambdas.size()));
      for (const auto& l : lambdas) {
        double best = 1e300;
        for (const auto& r : roots) best = std::min(best, std::abs(r.value - l));
        CHECK(best <= 1e-8 * std::max(1.0, std::abs(l)));
      }
    }
  }
  // Deficit family: shift b1, c1 so that P = Q = 0.
  for (int m : {3, 4, 5, 6}) {
    for (int it = 0; it < 5; ++it) {
      auto b = oracle::random_vector(rng, static_cast<std::size_t>(m));
      auto c = oracle::random_vector(rng, static_cast<std::size_t>(m));
      const PQSums pq = pq_sums(slices_from(b, c));
      b[0] -= pq.p;
      c[0] -= pq.q;
      const Hypermatrix a = oracle::tensor_from_slices(b, c);
      if (!is_regular(a).regular) continue;
      CHECK(deficit_indicator(a).has_deficit);
      const EcharResult r = compute_echar(a);
      CHECK(r.psi.degree() < r.top_power());
      CHECK(eigenpairs_n2(a).count(EigenKind::deficit) > 0);
    }
  }
}

TEST_CASE("eigenvalues are frame independent") {
  std::mt19937_64 rng(63);
  const auto c = OrthogonalMatrix::rotation2(BigRational(3, 5), BigRational(4, 5));
  for (int m : {3, 4}) {
    const Hypermatrix a = random_tensor(rng, m, 2);
    auto before = eigenpairs_n2(a).pairs;
    auto after = eigenpairs_n2(rotate(a, c)).pairs;
    REQUIRE(before.size() == after.size());
    for (const auto& p : before) {
      double best = 1e300;
      for (const auto& q : after) {
        best = std::min(best, std::abs(p.lambda - q.lambda));
        if (p.plus_minus) best = std::min(best, std::abs(p.lambda + q.lambda));
      }
      CHECK(best <= 1e-8 * std::max(1.0, std::abs(p.lambda)));
    }
  }
}
