#include "echar/resultant.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "echar/errors.hpp"

namespace echar {

BinaryForm BinaryForm::from_rationals(std::span<const BigRational> c) {
  BinaryForm f;
  f.coeffs.reserve(c.size());
  for (const auto& x : c) f.coeffs.emplace_back(x);
  return f;
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const UnivariatePoly& p) { return p.is_zero(); });
}

bool BinaryForm::is_scalar() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const UnivariatePoly& p) { return p.degree() <= 0; });
}

std::vector<BigRational> BinaryForm::scalar_coeffs() const {
  if (!is_scalar()) throw DomainError("binary form has lambda-dependent coefficients");
  std::vector<BigRational> out;
  out.reserve(coeffs.size());
  for (const auto& p : coeffs) out.push_back(p.coeff(0));
  return out;
}

BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) {
  BinaryForm h;
  h.coeffs.resize(f.coeffs.size() + g.coeffs.size() - 1);
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < g.coeffs.size(); ++j) h.coeffs[i + j] += f.coeffs[i] * g.coeffs[j];
  }
  return h;
}

BinaryForm scale(const BinaryForm& f, const BigRational& t) {
  BinaryForm g = f;
  for (auto& c : g.coeffs) c *= t;
  return g;
}

BinaryForm add(const BinaryForm& f, const BinaryForm& g) {
  if (f.degree() != g.degree()) throw DomainError("adding binary forms of different degree");
  BinaryForm h = f;
  for (std::size_t i = 0; i < g.coeffs.size(); ++i) h.coeffs[i] += g.coeffs[i];
  return h;
}

BinaryForm substitute(const BinaryForm& f, const BigRational& a, const BigRational& b, const BigRational& c,
                      const BigRational& d) {
  const int deg = f.degree();
  BinaryForm first = BinaryForm::from_rationals(std::vector<BigRational>{a, b});
  BinaryForm second = BinaryForm::from_rationals(std::vector<BigRational>{c, d});
  BinaryForm one = BinaryForm::from_rationals(std::vector<BigRational>{BigRational(1)});
  std::vector<BinaryForm> pow1{one};
  std::vector<BinaryForm> pow2{one};
  for (int k = 1; k <= deg; ++k) {
    pow1.push_back(pow1.back() * first);
    pow2.push_back(pow2.back() * second);
  }
  BinaryForm out;
  out.coeffs.resize(static_cast<std::size_t>(deg) + 1);
  for (int i = 0; i <= deg; ++i) {
    BinaryForm term = pow1[static_cast<std::size_t>(deg - i)] * pow2[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < term.coeffs.size(); ++k) out.coeffs[k] += f.coeffs[static_cast<std::size_t>(i)] * term.coeffs[k];
  }
  return out;
}

PolyMatrix sylvester_matrix(const BinaryForm& f, const BinaryForm& g) {
  if (f.degree() < 1 || g.degree() < 1) throw DomainError("Sylvester resultant needs forms of degree >= 1");
  const auto d = static_cast<std::size_t>(f.degree());
  const auto e = static_cast<std::size_t>(g.degree());
  PolyMatrix s = PolyMatrix::square(d + e);
  for (std::size_t r = 0; r < e; ++r) {
    for (std::size_t i = 0; i <= d; ++i) s(r, r + i) = f.coeffs[i];
  }
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t i = 0; i <= e; ++i) s(e + r, r + i) = g.coeffs[i];
  }
  return s;
}

UnivariatePoly sylvester_resultant(const BinaryForm& f, const BinaryForm& g) {
  return polymatrix_det(sylvester_matrix(f, g));
}

BigRational sylvester_resultant(std::span<const BigRational> f, std::span<const BigRational> g) {
  return sylvester_resultant(BinaryForm::from_rationals(f), BinaryForm::from_rationals(g)).coeff(0);
}

void HomogeneousForm::add_term(const Monomial& exponent, const BigRational& coeff) {
  if (sgn(coeff) == 0) return;
  auto it = terms.find(exponent);
  if (it == terms.end()) {
    terms.emplace(exponent, coeff);
    return;
  }
  it->second += coeff;
  if (sgn(it->second) == 0) terms.erase(it);
}

BigRational HomogeneousForm::coeff(const Monomial& exponent) const {
  auto it = terms.find(exponent);
  return it == terms.end() ? BigRational(0) : it->second;
}

ComplexRational HomogeneousForm::eval(std::span<const ComplexRational> x) const {
  ComplexRational acc;
  for (const auto& [mono, c] : terms) {
    if (mono.size() != x.size()) throw DimensionError("point dimension does not match form");
    ComplexRational t(c);
    for (std::size_t k = 0; k < mono.size(); ++k) {
      if (mono[k] > 0) t *= pow(x[k], static_cast<unsigned>(mono[k]));
    }
    acc += t;
  }
  return acc;
}

HomogeneousForm monomial_form(const Monomial& exponent, const BigRational& coeff) {
  HomogeneousForm f;
  f.degree = std::accumulate(exponent.begin(), exponent.end(), 0);
  f.add_term(exponent, coeff);
  return f;
}

HomogeneousForm operator*(const HomogeneousForm& f, const HomogeneousForm& g) {
  HomogeneousForm h;
  h.degree = f.degree + g.degree;
  for (const auto& [ma, ca] : f.terms) {
    for (const auto& [mb, cb] : g.terms) {
      if (ma.size() != mb.size()) throw DimensionError("multiplying forms in different variable counts");
      Monomial mc(ma.size());
      for (std::size_t k = 0; k < ma.size(); ++k) mc[k] = ma[k] + mb[k];
      h.add_term(mc, ca * cb);
    }
  }
  return h;
}

HomogeneousForm scale(const HomogeneousForm& f, const BigRational& t) {
  HomogeneousForm g;
  g.degree = f.degree;
  for (const auto& [mono, c] : f.terms) g.add_term(mono, c * t);
  return g;
}

HomogeneousForm add(const HomogeneousForm& f, const HomogeneousForm& g) {
  if (f.degree != g.degree && !f.terms.empty() && !g.terms.empty()) {
    throw DomainError("adding forms of different degree");
  }
  HomogeneousForm h = f;
  if (f.terms.empty()) h.degree = g.degree;
  for (const auto& [mono, c] : g.terms) h.add_term(mono, c);
  return h;
}

HomogeneousForm substitute(const HomogeneousForm& f, const std::vector<std::vector<BigRational>>& rows) {
  const std::size_t k = rows.size();
  std::vector<HomogeneousForm> linear(k);
  for (std::size_t i = 0; i < k; ++i) {
    linear[i].degree = 1;
    for (std::size_t j = 0; j < k; ++j) {
      Monomial e(k, 0);
      e[j] = 1;
      linear[i].add_term(e, rows[i][j]);
    }
  }
  HomogeneousForm out;
  out.degree = f.degree;
  for (const auto& [mono, c] : f.terms) {
    if (mono.size() != k) throw DimensionError("substitution size mismatch");
    HomogeneousForm term = monomial_form(Monomial(k, 0), c);
    for (std::size_t i = 0; i < k; ++i) {
      for (int p = 0; p < mono[i]; ++p) term = term * linear[i];
    }
    for (const auto& [m2, c2] : term.terms) out.add_term(m2, c2);
  }
  return out;
}

HomogeneousForm append_variable(const HomogeneousForm& f) {
  HomogeneousForm g;
  g.degree = f.degree;
  for (const auto& [mono, c] : f.terms) {
    Monomial e = mono;
    e.push_back(0);
    g.terms.emplace(std::move(e), c);
  }
  return g;
}

void HomogeneousSystem::validate() const {
  if (variables < 1) throw DomainError("system needs at least one variable");
  if (static_cast<int>(forms.size()) != variables) {
    throw DimensionError("resultant needs as many forms as variables");
  }
  for (const auto& f : forms) {
    if (f.degree < 1) throw DomainError("forms must have positive degree");
    for (const auto& [mono, c] : f.terms) {
      if (static_cast<int>(mono.size()) != variables) throw DimensionError("exponent vector has wrong length");
      int total = 0;
      for (int e : mono) {
        if (e < 0) throw DomainError("negative exponent");
        total += e;
      }
      if (total != f.degree) throw DomainError("form is not homogeneous of its stated degree");
    }
  }
}

namespace {

std::vector<Monomial> monomials_of_degree(int vars, int degree) {
  std::vector<Monomial> out;
  Monomial cur(static_cast<std::size_t>(vars), 0);
  // Lexicographically descending enumeration.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == vars - 1) {
      cur[static_cast<std::size_t>(pos)] = remaining;
      out.push_back(cur);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[static_cast<std::size_t>(pos)] = e;
      self(self, pos + 1, remaining - e);
    }
  };
  rec(rec, 0, degree);
  return out;
}

int critical_degree(const HomogeneousSystem& s) {
  int total = 1;
  for (const auto& f : s.forms) total += f.degree - 1;
  return total;
}

struct MacaulayMatrices {
  RationalMatrix full;
  RationalMatrix extraneous;
};

MacaulayMatrices build_macaulay(const HomogeneousSystem& s) {
  const int k = s.variables;
  const auto monos = monomials_of_degree(k, critical_degree(s));
  std::map<Monomial, std::size_t> column;
  for (std::size_t i = 0; i < monos.size(); ++i) column.emplace(monos[i], i);

  const std::size_t n = monos.size();
  MacaulayMatrices out{RationalMatrix::square(n), {}};
  std::vector<std::size_t> non_reduced;
  for (std::size_t r = 0; r < n; ++r) {
    const Monomial& alpha = monos[r];
    int owner = -1;
    int divisible = 0;
    for (int i = 0; i < k; ++i) {
      if (alpha[static_cast<std::size_t>(i)] >= s.forms[static_cast<std::size_t>(i)].degree) {
        if (owner < 0) owner = i;
        ++divisible;
      }
    }
    if (divisible > 1) non_reduced.push_back(r);
    Monomial shift = alpha;
    shift[static_cast<std::size_t>(owner)] -= s.forms[static_cast<std::size_t>(owner)].degree;
    for (const auto& [mono, c] : s.forms[static_cast<std::size_t>(owner)].terms) {
      Monomial target = mono;
      for (std::size_t v = 0; v < target.size(); ++v) target[v] += shift[v];
      out.full(r, column.at(target)) = c;
    }
  }
  out.extraneous = RationalMatrix::square(non_reduced.size());
  for (std::size_t i = 0; i < non_reduced.size(); ++i) {
    for (std::size_t j = 0; j < non_reduced.size(); ++j) {
      out.extraneous(i, j) = out.full(non_reduced[i], non_reduced[j]);
    }
  }
  return out;
}

HomogeneousSystem permute_variables(const HomogeneousSystem& s, const std::vector<int>& perm) {
  // New variable j is old variable perm[j].
  HomogeneousSystem t;
  t.variables = s.variables;
  for (const auto& f : s.forms) {
    HomogeneousForm g;
    g.degree = f.degree;
    for (const auto& [mono, c] : f.terms) {
      Monomial e(mono.size());
      for (std::size_t j = 0; j < e.size(); ++j) e[j] = mono[static_cast<std::size_t>(perm[j])];
      g.terms.emplace(std::move(e), c);
    }
    t.forms.push_back(std::move(g));
  }
  return t;
}

int permutation_sign(const std::vector<int>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) sign = -sign;
    }
  }
  return sign;
}

}  // namespace

std::size_t macaulay_matrix_dim(const HomogeneousSystem& s) {
  // C(D + k - 1, k - 1)
  const auto k = static_cast<unsigned>(s.variables);
  const auto d = static_cast<unsigned>(critical_degree(s));
  return binomial(d + k - 1, k - 1).get_ui();
}

BigRational macaulay_resultant(const HomogeneousSystem& s, const MacaulayLimits& limits, MacaulayPath* path) {
  s.validate();
  if (s.variables > limits.max_variables) {
    throw UnsupportedError("Macaulay resultant limited to " + std::to_string(limits.max_variables) + " variables");
  }
  if (macaulay_matrix_dim(s) > limits.max_matrix_dim) {
    throw UnsupportedError("Macaulay matrix of size " + std::to_string(macaulay_matrix_dim(s)) + " exceeds the cap of " +
                           std::to_string(limits.max_matrix_dim));
  }
  if (path) *path = MacaulayPath::direct;

  // Res(F o P) = det(P)^{d_1...d_k} Res(F) for a permutation matrix P.
  bool odd_degree_product = true;
  for (const auto& f : s.forms) odd_degree_product = odd_degree_product && (f.degree % 2 == 1);

  std::vector<int> perm(static_cast<std::size_t>(s.variables));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    HomogeneousSystem t = permute_variables(s, perm);
    MacaulayMatrices mm = build_macaulay(t);
    BigRational den = det(mm.extraneous);
    if (sgn(den) != 0) {
      BigRational res = det(mm.full) / den;
      if (odd_degree_product && permutation_sign(perm) < 0) res = -res;
      if (path && !std::is_sorted(perm.begin(), perm.end())) *path = MacaulayPath::reordered;
      return res;
    }
  } while (limits.retry_coordinates && std::next_permutation(perm.begin(), perm.end()));

  // Substitutions x -> Lx with det L = 1 leave Res unchanged and
  // usually make the extraneous minor nonsingular.
  const auto k = static_cast<std::size_t>(s.variables);
  for (int attempt = 1; limits.retry_coordinates && attempt <= 3; ++attempt) {
    // Upper times lower unitriangular, so every variable is mixed.
    std::vector<std::vector<BigRational>> upper(k, std::vector<BigRational>(k)), rows = upper;
    for (std::size_t i = 0; i < k; ++i) {
      upper[i][i] = 1;
      for (std::size_t j = i + 1; j < k; ++j) upper[i][j] = static_cast<long>((attempt + i + 2 * j) % 5) - 2;
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        // lower[l][j] = 1 on the diagonal, (attempt + l + j) % 3 - 1 below it.
        for (std::size_t l = std::max(i, j); l < k; ++l) {
          const BigRational lower = l == j ? BigRational(1) : BigRational(static_cast<long>((attempt + l + j) % 3) - 1);
          rows[i][j] += upper[i][l] * lower;
        }
      }
    }
    HomogeneousSystem t{s.variables, {}};
    for (const auto& f : s.forms) t.forms.push_back(substitute(f, rows));
    MacaulayMatrices mm = build_macaulay(t);
    BigRational den = det(mm.extraneous);
    if (sgn(den) == 0) continue;
    if (path) *path = MacaulayPath::transformed;
    return det(mm.full) / den;
  }

  // Perturb F_i -> F_i + t x_i^{d_i}: rows are aligned with their owning
  // monomial, so the matrices become M + tI and M' + tI.
  if (path) *path = MacaulayPath::perturbed;
  MacaulayMatrices mm = build_macaulay(s);
  auto shifted_det = [](const RationalMatrix& m) {
    RationalMatrix neg = m;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) neg(i, j) = -m(i, j);
    }
    return char_poly(neg);  // det(tI - (-M)) = det(M + tI)
  };
  UnivariatePoly num = shifted_det(mm.full);
  UnivariatePoly den = shifted_det(mm.extraneous);
  return exact_div(num, den).coeff(0);
}

}  // namespace echar
