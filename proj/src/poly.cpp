#include "echar/poly.hpp"

#include <algorithm>
#include <sstream>

#include "echar/errors.hpp"

namespace echar {

namespace {

const BigRational& zero_rational() {
  static const BigRational z(0);
  return z;
}

}  // namespace

UnivariatePoly::UnivariatePoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UnivariatePoly::UnivariatePoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

UnivariatePoly::UnivariatePoly(const BigRational& c) {
  if (sgn(c) != 0) coeffs_.push_back(c);
}

UnivariatePoly UnivariatePoly::monomial(const BigRational& c, unsigned degree) {
  if (sgn(c) == 0) return {};
  std::vector<BigRational> v(degree + 1);
  v[degree] = c;
  return UnivariatePoly(std::move(v));
}

void UnivariatePoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const BigRational& UnivariatePoly::coeff(std::size_t j) const {
  return j < coeffs_.size() ? coeffs_[j] : zero_rational();
}

BigRational UnivariatePoly::eval(const BigRational& x) const {
  BigRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

ComplexRational UnivariatePoly::eval(const ComplexRational& x) const {
  ComplexRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc.re += *it;
  }
  return acc;
}

UnivariatePoly UnivariatePoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigRational> d(coeffs_.size() - 1);
  for (std::size_t j = 1; j < coeffs_.size(); ++j) d[j - 1] = coeffs_[j] * static_cast<long>(j);
  return UnivariatePoly(std::move(d));
}

UnivariatePoly UnivariatePoly::scale_variable(const BigRational& t) const {
  std::vector<BigRational> v(coeffs_);
  BigRational power(1);
  for (auto& c : v) {
    c *= power;
    power *= t;
  }
  return UnivariatePoly(std::move(v));
}

UnivariatePoly& UnivariatePoly::operator+=(const UnivariatePoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  trim();
  return *this;
}

UnivariatePoly& UnivariatePoly::operator-=(const UnivariatePoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
  trim();
  return *this;
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UnivariatePoly(std::move(v));
}

UnivariatePoly& UnivariatePoly::operator*=(const UnivariatePoly& o) { return *this = *this * o; }

UnivariatePoly& UnivariatePoly::operator*=(const BigRational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UnivariatePoly operator-(UnivariatePoly a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

std::string UnivariatePoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = degree(); j >= 0; --j) {
    const BigRational& c = coeffs_[static_cast<std::size_t>(j)];
    if (sgn(c) == 0) continue;
    BigRational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (!unit || j == 0) os << echar::to_string(mag);
    if (j > 0) {
      if (!unit) os << "*";
      os << var;
      if (j > 1) os << "^" << j;
    }
  }
  return os.str();
}

UnivariatePoly pow(const UnivariatePoly& p, unsigned exponent) {
  UnivariatePoly result(BigRational(1));
  UnivariatePoly b = p;
  while (exponent) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent) b *= b;
  }
  return result;
}

std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& num, const UnivariatePoly& den) {
  if (den.is_zero()) throw DomainError("polynomial division by zero");
  if (num.degree() < den.degree()) return {UnivariatePoly(), num};
  std::vector<BigRational> rem(num.coeffs().begin(), num.coeffs().end());
  const int dd = den.degree();
  std::vector<BigRational> quot(static_cast<std::size_t>(num.degree() - dd + 1));
  const BigRational inv_lead = 1 / den.leading();
  for (int k = num.degree() - dd; k >= 0; --k) {
    BigRational q = rem[static_cast<std::size_t>(k + dd)] * inv_lead;
    if (sgn(q) == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * den.coeff(static_cast<std::size_t>(j));
    quot[static_cast<std::size_t>(k)] = std::move(q);
  }
  return {UnivariatePoly(std::move(quot)), UnivariatePoly(std::move(rem))};
}

UnivariatePoly exact_div(const UnivariatePoly& num, const UnivariatePoly& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) throw Error("inexact polynomial division");
  return q;
}

UnivariatePoly exact_div(const UnivariatePoly& num, const BigRational& den) {
  if (sgn(den) == 0) throw DomainError("polynomial division by zero scalar");
  return num * (1 / den);
}

UnivariatePoly make_monic(const UnivariatePoly& p) {
  if (p.is_zero()) return p;
  return p * (1 / p.leading());
}

UnivariatePoly gcd(const UnivariatePoly& a, const UnivariatePoly& b) {
  UnivariatePoly x = a;
  UnivariatePoly y = b;
  while (!y.is_zero()) {
    UnivariatePoly r = divmod(x, y).second;
    x = std::move(y);
    y = make_monic(r);
  }
  return make_monic(x);
}

std::vector<std::pair<UnivariatePoly, int>> squarefree_decomposition(const UnivariatePoly& p) {
  std::vector<std::pair<UnivariatePoly, int>> out;
  if (p.degree() < 1) return out;
  UnivariatePoly f = make_monic(p);
  UnivariatePoly fp = f.derivative();
  UnivariatePoly a0 = gcd(f, fp);
  UnivariatePoly b = exact_div(f, a0);
  UnivariatePoly c = exact_div(fp, a0);
  UnivariatePoly d = c - b.derivative();
  for (int k = 1; b.degree() > 0; ++k) {
    UnivariatePoly a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, k);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - b.derivative();
  }
  return out;
}

std::vector<BigRational> interpolation_nodes(std::size_t count) {
  std::vector<BigRational> nodes;
  nodes.reserve(count);
  for (std::size_t k = 0; nodes.size() < count; ++k) {
    long v = static_cast<long>((k + 1) / 2);
    nodes.emplace_back(k % 2 == 1 ? v : -v);
  }
  return nodes;
}

UnivariatePoly interpolate(std::span<const BigRational> nodes, std::span<const BigRational> values) {
  if (nodes.size() != values.size()) throw DimensionError("interpolate: node/value count mismatch");
  const std::size_t n = nodes.size();
  std::vector<BigRational> dd(values.begin(), values.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      BigRational gap = nodes[i] - nodes[i - level];
      if (sgn(gap) == 0) throw DomainError("interpolate: repeated node");
      dd[i] = (dd[i] - dd[i - 1]) / gap;
    }
  }
  UnivariatePoly p;
  for (std::size_t k = n; k-- > 0;) {
    p *= UnivariatePoly(std::vector<BigRational>{-nodes[k], BigRational(1)});
    p += UnivariatePoly(dd[k]);
  }
  return p;
}

BigRational det(const RationalMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return BigRational(1);
  std::vector<BigInt> a(n * n);
  BigInt scale(1);
  for (std::size_t r = 0; r < n; ++r) {
    BigInt l(1);
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < n; ++c) a[r * n + c] = m(r, c).get_num() * (l / m(r, c).get_den());
    scale *= l;
  }
  auto at = [&](std::size_t r, std::size_t c) -> BigInt& { return a[r * n + c]; };
  int sign = 1;
  BigInt prev(1);
  BigInt tmp;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(at(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(at(p, k)) == 0) ++p;
      if (p == n) return BigRational(0);
      for (std::size_t c = k; c < n; ++c) std::swap(at(k, c), at(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        tmp = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = at(k, k);
  }
  return make_rational(sign * at(n - 1, n - 1), scale);
}

int det_degree_bound(const PolyMatrix& m) {
  int total = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    int row_max = kDegreeMinusInfinity;
    for (std::size_t c = 0; c < m.cols(); ++c) row_max = std::max(row_max, m(r, c).degree());
    if (row_max == kDegreeMinusInfinity) return kDegreeMinusInfinity;  // zero row
    total += row_max;
  }
  return total;
}

RationalMatrix evaluate(const PolyMatrix& m, const BigRational& x) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).eval(x);
  }
  return out;
}

UnivariatePoly polymatrix_det(const PolyMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const int bound = det_degree_bound(m);
  if (bound == kDegreeMinusInfinity) return {};
  auto nodes = interpolation_nodes(static_cast<std::size_t>(bound) + 1);
  std::vector<BigRational> values;
  values.reserve(nodes.size());
  for (const auto& x : nodes) values.push_back(det(evaluate(m, x)));
  return interpolate(nodes, values);
}

UnivariatePoly polymatrix_det_fraction_free(const PolyMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return UnivariatePoly(BigRational(1));
  PolyMatrix a = m;
  int sign = 1;
  UnivariatePoly prev(BigRational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // lowest-degree nonzero pivot keeps intermediate degrees down
    std::size_t best = n;
    for (std::size_t r = k; r < n; ++r) {
      if (a(r, k).is_zero()) continue;
      if (best == n || a(r, k).degree() < a(best, k).degree()) best = r;
    }
    if (best == n) return {};
    if (best != k) {
      for (std::size_t c = k; c < n; ++c) std::swap(a(k, c), a(best, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
      }
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

}  // namespace echar

namespace echar {

UnivariatePoly char_poly(const RationalMatrix& m) {
  if (!m.is_square()) throw DimensionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix h = m;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t col = 0; col + 2 < n; ++col) {
    std::size_t p = col + 1;
    while (p < n && sgn(h(p, col)) == 0) ++p;
    if (p == n) continue;
    if (p != col + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(p, j), h(col + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, p), h(i, col + 1));
    }
    const BigRational pivot = h(col + 1, col);
    for (std::size_t r = col + 2; r < n; ++r) {
      if (sgn(h(r, col)) == 0) continue;
      BigRational f = h(r, col) / pivot;
      for (std::size_t j = 0; j < n; ++j) h(r, j) -= f * h(col + 1, j);
      for (std::size_t i = 0; i < n; ++i) h(i, col + 1) += f * h(i, r);
    }
  }
  // p_k = det(x I - H[0..k)) by the Hessenberg recurrence.
  std::vector<UnivariatePoly> p;
  p.reserve(n + 1);
  p.emplace_back(BigRational(1));
  const UnivariatePoly x = UnivariatePoly::variable();
  for (std::size_t k = 1; k <= n; ++k) {
    UnivariatePoly next = (x - UnivariatePoly(h(k - 1, k - 1))) * p[k - 1];
    BigRational prod(1);
    for (std::size_t i = 1; i < k; ++i) {
      prod *= h(k - i, k - i - 1);
      if (sgn(prod) == 0) break;
      next -= (prod * h(k - i - 1, k - 1)) * p[k - i - 1];
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

}  // namespace echar
