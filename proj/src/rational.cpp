#include "echar/rational.hpp"

#include <cctype>

#include "echar/errors.hpp"

namespace echar {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t k = start; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw DomainError("rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigRational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw ParseError("not a rational literal: '" + std::string(text) + "'");
  }
  BigInt d = parse_integer(den);
  if (sgn(d) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return make_rational(parse_integer(num), d);
}

std::string to_string(const BigRational& q) { return q.get_str(10); }

BigRational pow(const BigRational& base, unsigned exponent) {
  BigRational result(1);
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  result.canonicalize();
  return result;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

ComplexRational& ComplexRational::operator+=(const ComplexRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

ComplexRational& ComplexRational::operator-=(const ComplexRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

ComplexRational& ComplexRational::operator*=(const ComplexRational& o) {
  BigRational r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

ComplexRational& ComplexRational::operator/=(const ComplexRational& o) {
  BigRational n2 = o.norm2();
  if (sgn(n2) == 0) throw DomainError("complex division by zero");
  BigRational r = (re * o.re + im * o.im) / n2;
  im = (im * o.re - re * o.im) / n2;
  re = std::move(r);
  return *this;
}

ComplexRational pow(const ComplexRational& base, unsigned exponent) {
  ComplexRational result(1);
  ComplexRational b = base;
  while (exponent) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent) b *= b;
  }
  return result;
}

std::string to_string(const ComplexRational& z) {
  if (z.is_real()) return to_string(z.re);
  std::string s = to_string(z.re);
  s += sgn(z.im) < 0 ? "-" : "+";
  s += to_string(abs(z.im));
  s += "i";
  return s;
}

}  // namespace echar
