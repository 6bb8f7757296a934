#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>

namespace hallmod {

using BigInt = mpz_class;
using BigRational = mpq_class;

BigRational rational_pow(const BigRational& x, int e);
std::string to_string(const BigRational& x);
double to_double(const BigRational& x);

/* Laurent polynomial in one formal parameter with rational coefficients.
   Zero coefficients are never stored. */
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const BigRational& c);  // NOLINT: constants convert implicitly
  LaurentPoly(long c) : LaurentPoly(BigRational(c)) {}
  LaurentPoly(int c) : LaurentPoly(BigRational(c)) {}

  static LaurentPoly monomial(const BigRational& c, int e);
  static LaurentPoly var() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }
  bool is_monomial() const { return c_.size() == 1; }
  int low_degree() const;   // requires nonzero
  int high_degree() const;  // requires nonzero
  BigRational coeff(int e) const;
  const BigRational& leading_coeff() const { return c_.rbegin()->second; }
  const std::map<int, BigRational>& terms() const { return c_; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const BigRational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }

  /// Multiplies by t^k.
  LaurentPoly shifted(int k) const;
  /// Substitutes t -> c * t^k (k may be negative).
  LaurentPoly substitute(int k, const BigRational& c) const;
  /// Exact value at x; throws ZeroBase for x = 0 with a negative exponent.
  BigRational eval(const BigRational& x) const;

  /// Terms in ascending exponent, e.g. "1 + -1*t^2"; "0" for zero.
  std::string to_string(const std::string& var = "t") const;
  static LaurentPoly parse(std::string_view text, const std::string& var = "t");

 private:
  std::map<int, BigRational> c_;
};

/* Ratio num/den of Laurent polynomials kept in canonical form: den has
   lowest exponent 0 and is monic, and gcd(num, den) = 1 up to a monomial.
   With that normalization structural equality is value equality. */
class LaurentRational {
 public:
  LaurentRational() : den_(1) {}
  LaurentRational(const BigRational& c) : num_(c), den_(1) {}  // NOLINT
  LaurentRational(long c) : LaurentRational(BigRational(c)) {}
  LaurentRational(int c) : LaurentRational(BigRational(c)) {}
  LaurentRational(const LaurentPoly& num) : num_(num), den_(1) {}  // NOLINT
  LaurentRational(const LaurentPoly& num, const LaurentPoly& den);

  static LaurentRational var() { return LaurentRational(LaurentPoly::var()); }
  static LaurentRational monomial(const BigRational& c, int e) {
    return LaurentRational(LaurentPoly::monomial(c, e));
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent_poly() const { return den_.is_constant(); }
  bool is_constant() const { return den_.is_constant() && num_.is_constant(); }

  LaurentRational& operator+=(const LaurentRational& o);
  LaurentRational& operator-=(const LaurentRational& o);
  LaurentRational& operator*=(const LaurentRational& o);
  LaurentRational& operator/=(const LaurentRational& o);
  friend LaurentRational operator+(LaurentRational a, const LaurentRational& b) { return a += b; }
  friend LaurentRational operator-(LaurentRational a, const LaurentRational& b) { return a -= b; }
  friend LaurentRational operator*(LaurentRational a, const LaurentRational& b) { return a *= b; }
  friend LaurentRational operator/(LaurentRational a, const LaurentRational& b) { return a /= b; }
  LaurentRational operator-() const;
  bool operator==(const LaurentRational& o) const { return num_ == o.num_ && den_ == o.den_; }

  LaurentRational pow(int e) const;
  LaurentRational substitute(int k, const BigRational& c) const;
  /// Throws PoleAtPoint if the reduced denominator vanishes at x, ZeroBase for x = 0 with negative powers.
  BigRational eval(const BigRational& x) const;

  std::string to_string(const std::string& var = "t") const;  // "(<num>)/(<den>)"
  static LaurentRational parse(std::string_view text, const std::string& var = "t");

 private:
  void normalize();
  LaurentPoly num_, den_;
};

/// (a;q)_n = Π_{j<n} (1 - a q^j)
LaurentRational pochhammer(const LaurentRational& a, const LaurentRational& q, int n);
/// Gaussian binomial [n m]_t in the formal parameter; n may be negative.
LaurentRational qbinomial(int n, int m);

/// Polynomial gcd over Q of two Laurent polynomials, monic, with lowest exponent 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace hallmod
