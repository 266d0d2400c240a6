#include "echar/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "echar/echar.hpp"
#include "echar/eigen.hpp"
#include "echar/errors.hpp"
#include "echar/roots.hpp"
#include "parallel.hpp"

namespace echar {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "unknown";
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "constant-term",   "leading-coefficient", "degree-bound",        "parity",
      "homogeneity",     "orthonormal-invariance", "route-equivalence", "eigen-count",
      "root-correspondence", "deficit-criterion", "eigen-residual",     "resultant-laws",
  };
  return names;
}

namespace {

constexpr double kRootMatchTol = 1e-8;
constexpr double kResidualTol = 1e-8;

CheckResult pass(std::string name, std::string detail = {}) { return {std::move(name), CheckStatus::pass, std::move(detail)}; }
CheckResult fail(std::string name, std::string detail) { return {std::move(name), CheckStatus::fail, std::move(detail)}; }
CheckResult skip(std::string name, std::string detail) { return {std::move(name), CheckStatus::skip, std::move(detail)}; }
CheckResult verdict(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)};
}

std::string poly_str(const UnivariatePoly& p) { return p.is_zero() ? "0" : p.to_string("L"); }

CheckResult check_homogeneity(const Hypermatrix& a, const EcharResult& base, const MacaulayLimits& limits) {
  const BigRational t(-3, 2);
  const UnivariatePoly scaled = compute_echar(a.scaled(t), RouteChoice::automatic, limits).psi;
  const int total = psi_total_degree(a.order(), a.dim());
  std::vector<BigRational> expect;
  for (std::size_t j = 0; j < base.psi.coeffs().size(); ++j) {
    const int power = total - static_cast<int>(j);
    if (power < 0) {
      if (!is_zero(base.psi.coeff(j))) return fail("homogeneity", "coefficient above the total degree");
      expect.emplace_back(0);
      continue;
    }
    expect.push_back(base.psi.coeff(j) * pow(t, static_cast<unsigned>(power)));
  }
  const UnivariatePoly want{std::move(expect)};
  return verdict("homogeneity", scaled == want, "t = -3/2; psi(tA) = " + poly_str(scaled));
}

CheckResult check_invariance(const Hypermatrix& a, const EcharResult& base, const MacaulayLimits& limits) {
  int frames = 0;
  for (const OrthogonalMatrix& c : invariance_frames(a.dim())) {
    const UnivariatePoly rotated = compute_echar(rotate(a, c), RouteChoice::automatic, limits).psi;
    if (rotated != base.psi) {
      return fail("orthonormal-invariance", "frame " + std::to_string(frames) + " gives " + poly_str(rotated));
    }
    ++frames;
  }
  return pass("orthonormal-invariance", std::to_string(frames) + " frames");
}

CheckResult check_routes(const Hypermatrix& a, const EcharResult& base, bool regular, const MacaulayLimits& limits) {
  const std::string name = "route-equivalence";
  if (a.dim() != 2) return skip(name, "only one route for n != 2");
  const bool even = a.order() % 2 == 0;
  std::vector<std::pair<std::string, UnivariatePoly>> routes;
  routes.emplace_back(even ? "sylvester" : "sylvester/(b_m c_1)", even ? echar_even_n2(a).psi : echar_odd_n2(a).psi);
  std::string note;
  if (even) {
    const UnivariatePoly raw_m1 = polymatrix_det(m1_matrix(binary_slices(a)));
    if (regular) {
      routes.emplace_back("M1", raw_m1);
    } else {
      note = raw_m1 == base.psi ? "; irregular, det(M1) agrees" : "; irregular, det(M1) differs: " + poly_str(raw_m1);
    }
  } else {
    routes.emplace_back("M2", m2_det(a).psi);
  }
  try {
    routes.emplace_back("macaulay", echar_macaulay(a, limits).psi);
  } catch (const UnsupportedError&) {
    note += "; macaulay over the size cap";
  }
  std::string names;
  for (const auto& [rname, p] : routes) {
    if (p != base.psi) return fail(name, rname + " gives " + poly_str(p) + " vs " + poly_str(base.psi));
    names += (names.empty() ? "" : ", ") + rname;
  }
  return pass(name, names + note);
}

// Greedy nearest matching of two multisets of complex numbers.
bool match_multisets(std::vector<std::complex<double>> want, std::vector<std::complex<double>> have, std::string& why) {
  if (want.size() != have.size()) {
    why = std::to_string(want.size()) + " eigenvalues vs " + std::to_string(have.size()) + " roots";
    return false;
  }
  std::vector<bool> used(have.size(), false);
  for (const auto& w : want) {
    std::size_t best = have.size();
    double best_d = 0;
    for (std::size_t j = 0; j < have.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(have[j] - w);
      if (best == have.size() || d < best_d) {
        best = j;
        best_d = d;
      }
    }
    if (best_d > kRootMatchTol * std::max(1.0, std::abs(w))) {
      std::ostringstream ss;
      ss << "eigenvalue " << w << " has no root within tolerance (nearest " << best_d << ")";
      why = ss.str();
      return false;
    }
    used[best] = true;
  }
  return true;
}

void check_eigen(const Hypermatrix& a, const EcharResult& base, bool regular, std::vector<CheckResult>& out) {
  if (a.dim() != 2) {
    for (const char* n : {"eigen-count", "root-correspondence", "deficit-criterion", "eigen-residual"}) {
      out.push_back(skip(n, "eigenpairs are enumerated for n = 2"));
    }
    return;
  }
  const int m = a.order();
  const EigenpairSet set = eigenpairs_n2(a);
  if (set.infinitely_many) {
    out.push_back(verdict("eigen-count", base.psi.is_zero(), "infinitely many classes; psi must vanish"));
    for (const char* n : {"root-correspondence", "deficit-criterion", "eigen-residual"}) {
      out.push_back(skip(n, "infinitely many classes"));
    }
    return;
  }
  out.push_back(verdict("eigen-count", set.class_count() == m,
                        std::to_string(set.count(EigenKind::normalized)) + " normalized + " +
                            std::to_string(set.count(EigenKind::deficit)) + " deficit"));

  if (!regular) {
    out.push_back(skip("root-correspondence", "irregular tensor"));
    out.push_back(skip("deficit-criterion", "irregular tensor"));
  } else {
    std::vector<std::complex<double>> lambdas;
    for (const auto& p : set.pairs) {
      if (p.kind != EigenKind::normalized) continue;
      for (int k = 0; k < p.multiplicity; ++k) {
        lambdas.push_back(p.lambda);
        if (p.plus_minus) lambdas.push_back(-p.lambda);
      }
    }
    std::vector<std::complex<double>> roots;
    for (const Root& r : complex_roots(base.psi)) {
      for (int k = 0; k < r.multiplicity; ++k) roots.push_back(r.value);
    }
    std::string why;
    const bool ok = match_multisets(lambdas, roots, why);
    out.push_back(verdict("root-correspondence", ok, ok ? std::to_string(roots.size()) + " roots matched" : why));

    const bool deficit = deficit_indicator(a).has_deficit;
    const bool drop = base.psi.degree() < base.top_power();
    out.push_back(verdict("deficit-criterion", deficit == drop,
                          std::string(deficit ? "P^2+Q^2 = 0" : "P^2+Q^2 != 0") + (drop ? ", degree drops" : ", full degree")));
  }

  double worst = 0;
  for (const auto& p : set.pairs) worst = std::max(worst, eigen_residual(a, p.x, p.lambda) / std::max(1.0, std::abs(p.lambda)));
  std::ostringstream ss;
  ss << "max scaled residual " << worst;
  out.push_back(verdict("eigen-residual", worst <= kResidualTol, ss.str()));
}

CheckResult check_resultant_laws(const Hypermatrix& a) {
  const std::string name = "resultant-laws";
  if (a.dim() != 2) return skip(name, "binary forms only");
  const SliceCoeffs s = binary_slices(a);
  const BinaryForm f = BinaryForm::from_rationals(s.b);
  const BinaryForm g = BinaryForm::from_rationals(s.c);
  const int d = a.order() - 1;
  const auto res = [](const BinaryForm& x, const BinaryForm& y) { return sylvester_resultant(x, y).coeff(0); };
  const BigRational r = res(f, g);

  std::vector<BigRational> xd(static_cast<std::size_t>(d) + 1), yd(static_cast<std::size_t>(d) + 1);
  xd.front() = 1;
  yd.back() = 1;
  if (res(BinaryForm::from_rationals(xd), BinaryForm::from_rationals(yd)) != 1) return fail(name, "Res(x1^d, x2^d) != 1");

  const BigRational t(5, 3);
  if (res(scale(f, t), g) != pow(t, static_cast<unsigned>(d)) * r) return fail(name, "per-form scaling");

  // (F, G) -> (2F - G, 3F + 5G), det 13
  const BinaryForm f2 = add(scale(f, 2), scale(g, -1));
  const BinaryForm g2 = add(scale(f, 3), scale(g, 5));
  if (res(f2, g2) != pow(BigRational(13), static_cast<unsigned>(d)) * r) return fail(name, "row mixing");

  const BinaryForm h = add(f, scale(g, BigRational(1, 2)));
  if (res(f * g, h) != res(f, h) * res(g, h)) return fail(name, "multiplicativity");

  // x -> L x with L = [[1, 2], [-1, 3]], det 5
  const BigRational one(1), two(2), mone(-1), three(3);
  const BinaryForm fl = substitute(f, one, two, mone, three);
  const BinaryForm gl = substitute(g, one, two, mone, three);
  if (res(fl, gl) != pow(BigRational(5), static_cast<unsigned>(d * d)) * r) return fail(name, "substitution");
  return pass(name, "normalization, scaling, row mixing, multiplicativity, substitution");
}

}  // namespace

std::vector<OrthogonalMatrix> invariance_frames(int dim) {
  std::vector<OrthogonalMatrix> frames;
  if (dim == 2) {
    const auto r345 = OrthogonalMatrix::rotation2(BigRational(3, 5), BigRational(4, 5));
    const auto r5_12 = OrthogonalMatrix::rotation2(BigRational(5, 13), BigRational(12, 13));
    const auto s0 = OrthogonalMatrix::reflection(2, 0);
    const auto s1 = OrthogonalMatrix::reflection(2, 1);
    frames = {r345, s0, s1, r345 * s0, r345 * r5_12, s1 * r345 * r345};
  } else {
    for (int axis = 0; axis < dim; ++axis) frames.push_back(OrthogonalMatrix::reflection(dim, axis));
    const std::size_t upper = static_cast<std::size_t>(dim * (dim - 1) / 2);
    std::vector<BigRational> s1(upper), s2(upper);
    for (std::size_t k = 0; k < upper; ++k) {
      s1[k] = make_rational(static_cast<long>(k) + 1, 2);
      s2[k] = make_rational(k % 2 ? -1 : 2, static_cast<long>(k) + 1);
    }
    if (upper > 0) {
      const auto c1 = OrthogonalMatrix::cayley(dim, s1);
      const auto c2 = OrthogonalMatrix::cayley(dim, s2);
      frames.push_back(c1);
      frames.push_back(c1 * c2 * frames.front());
    }
  }
  return frames;
}

std::vector<CheckResult> verify_tensor(const Hypermatrix& a, const MacaulayLimits& limits) {
  std::vector<CheckResult> out;
  const EcharResult base = compute_echar(a, RouteChoice::automatic, limits);
  const int m = a.order();

  out.push_back(verdict("constant-term", base.a0_matches(),
                        "psi(0) = " + to_string(base.psi.coeff(0)) + ", predicted " + to_string(base.a0_predicted)));
  if (auto lm = base.leading_matches()) {
    out.push_back(verdict("leading-coefficient", *lm,
                          "coefficient of L^" + std::to_string(base.top_power()) + " = " +
                              to_string(base.top_coefficient()) + ", predicted " + to_string(*base.leading_predicted)));
  } else {
    out.push_back(skip("leading-coefficient", "closed form is for n = 2"));
  }
  out.push_back(verdict("degree-bound", base.psi.degree() <= base.top_power(),
                        "degree " + (base.psi.is_zero() ? std::string("-inf") : std::to_string(base.psi.degree())) +
                            " <= " + std::to_string(base.top_power())));
  if (m % 2 == 1) {
    bool even_only = true;
    for (std::size_t j = 1; j < base.psi.coeffs().size(); j += 2) even_only = even_only && is_zero(base.psi.coeff(j));
    out.push_back(verdict("parity", even_only, "odd powers vanish"));
  } else {
    out.push_back(skip("parity", "even order"));
  }
  out.push_back(check_homogeneity(a, base, limits));
  out.push_back(check_invariance(a, base, limits));

  bool regular = true;
  try {
    regular = is_regular(a, limits).regular;
  } catch (const UnsupportedError&) {
  }
  out.push_back(check_routes(a, base, regular, limits));
  check_eigen(a, base, regular, out);
  out.push_back(check_resultant_laws(a));
  return out;
}

BigRational random_entry(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 19) - 9;
  const long den = static_cast<long>(rng() % 9) + 1;
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

Hypermatrix random_tensor(int order, int dim, std::mt19937_64& rng) {
  Hypermatrix a(order, dim);
  MultiIndex idx(static_cast<std::size_t>(order), 0);
  for (;;) {
    a.set(idx, random_entry(rng));
    std::size_t k = idx.size();
    while (k > 0 && idx[k - 1] == dim - 1) idx[--k] = 0;
    if (k == 0) break;
    ++idx[k - 1];
  }
  return a;
}

bool FuzzOutcome::ok() const {
  for (const auto& r : results) {
    for (const auto& c : r) {
      if (c.status == CheckStatus::fail) return false;
    }
  }
  return true;
}

FuzzOutcome run_fuzz(const FuzzOptions& opt, const MacaulayLimits& limits) {
  FuzzOutcome out;
  std::mt19937_64 rng(opt.seed);
  for (int i = 0; i < opt.count; ++i) out.corpus.push_back(random_tensor(opt.order, opt.dim, rng));
  out.results.resize(out.corpus.size());
  detail::parallel_for(
      out.corpus.size(),
      [&](std::size_t i) {
        try {
          out.results[i] = verify_tensor(out.corpus[i], limits);
        } catch (const std::exception& e) {
          out.results[i] = {fail("exception", e.what())};
        }
      },
      opt.workers);
  return out;
}

}  // namespace echar
