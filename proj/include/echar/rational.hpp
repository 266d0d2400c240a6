#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace echar {

using BigInt = mpz_class;
// gmpxx keeps mpq_class canonical (lowest terms, positive denominator) after
// every arithmetic operation; values built from raw parts go through
// make_rational().
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);

// Accepts "p", "-p", "p/q" with decimal integers; q must be nonzero.
BigRational parse_rational(std::string_view text);
std::string to_string(const BigRational& q);

BigRational pow(const BigRational& base, unsigned exponent);
BigInt binomial(unsigned n, unsigned k);

inline bool is_zero(const BigRational& q) { return sgn(q) == 0; }

// Exact element of Q(i).
struct ComplexRational {
  BigRational re;
  BigRational im;

  ComplexRational() = default;
  ComplexRational(BigRational real) : re(std::move(real)) {}  // NOLINT
  ComplexRational(long real) : re(real) {}                     // NOLINT
  ComplexRational(int real) : re(real) {}                      // NOLINT
  ComplexRational(BigRational real, BigRational imag) : re(std::move(real)), im(std::move(imag)) {}

  static ComplexRational i() { return {BigRational(0), BigRational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  ComplexRational conj() const { return {re, -im}; }
  BigRational norm2() const { return re * re + im * im; }
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  ComplexRational& operator+=(const ComplexRational& o);
  ComplexRational& operator-=(const ComplexRational& o);
  ComplexRational& operator*=(const ComplexRational& o);
  // Throws DomainError on division by zero.
  ComplexRational& operator/=(const ComplexRational& o);

  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
  friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

ComplexRational pow(const ComplexRational& base, unsigned exponent);
std::string to_string(const ComplexRational& z);

}  // namespace echar
