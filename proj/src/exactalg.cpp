#include "hallmod/exactalg.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "hallmod/error.hpp"

namespace hallmod {

BigRational rational_pow(const BigRational& x, int e) {
  if (e < 0) {
    if (x == 0) throw Error(ErrorCode::ZeroBase, "0 raised to a negative power");
    BigRational inv = 1 / x;
    return rational_pow(inv, -e);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const BigRational& x) { return x.get_str(); }

double to_double(const BigRational& x) { return x.get_d(); }

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(const BigRational& c) {
  if (c != 0) c_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(const BigRational& c, int e) {
  LaurentPoly p;
  if (c != 0) p.c_.emplace(e, c);
  return p;
}

int LaurentPoly::low_degree() const { return c_.begin()->first; }
int LaurentPoly::high_degree() const { return c_.rbegin()->first; }

BigRational LaurentPoly::coeff(int e) const {
  auto it = c_.find(e);
  return it == c_.end() ? BigRational(0) : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) {
    auto [it, fresh] = c_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) c_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) {
    auto [it, fresh] = c_.emplace(e, -c);
    if (!fresh) {
      it->second -= c;
      if (it->second == 0) c_.erase(it);
    }
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  BigRational prod;
  for (const auto& [ea, ca] : a.c_) {
    for (const auto& [eb, cb] : b.c_) {
      prod = ca * cb;
      auto [it, fresh] = r.c_.emplace(ea + eb, prod);
      if (!fresh) it->second += prod;
    }
  }
  for (auto it = r.c_.begin(); it != r.c_.end();) {
    if (it->second == 0)
      it = r.c_.erase(it);
    else
      ++it;
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const BigRational& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& [e, v] : c_) v *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, v] : r.c_) v = -v;
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : c_) r.c_.emplace_hint(r.c_.end(), e + k, c);
  return r;
}

LaurentPoly LaurentPoly::substitute(int k, const BigRational& c) const {
  LaurentPoly r;
  for (const auto& [e, v] : c_) r += monomial(v * rational_pow(c, e), k * e);
  return r;
}

BigRational LaurentPoly::eval(const BigRational& x) const {
  BigRational s = 0;
  for (const auto& [e, c] : c_) s += c * rational_pow(x, e);
  return s;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : c_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    if (e != 0) os << '*' << var << '^' << e;
  }
  return os.str();
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

BigRational parse_rational(const std::string& s) {
  if (s.empty() || s.find_first_not_of("+-0123456789/") != std::string::npos)
    throw Error(ErrorCode::ParseError, "bad coefficient '" + s + "'");
  BigRational r;
  std::string body = (s[0] == '+') ? s.substr(1) : s;
  if (r.set_str(body, 10) != 0) throw Error(ErrorCode::ParseError, "bad coefficient '" + s + "'");
  if (r.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, const std::string& var) {
  std::string s = trim(text);
  if (s == "0") return {};
  LaurentPoly r;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t plus = s.find('+', start);
    // a leading '+' or one directly after "/" would be part of a coefficient; the
    // printer never emits those, so every '+' here separates terms
    std::string term = trim(std::string_view(s).substr(start, plus == std::string::npos ? std::string::npos : plus - start));
    if (term.empty()) throw Error(ErrorCode::ParseError, "empty term in '" + s + "'");
    int e = 0;
    std::string coef = term;
    std::size_t star = term.find('*');
    if (star != std::string::npos) {
      coef = trim(std::string_view(term).substr(0, star));
      std::string rest = trim(std::string_view(term).substr(star + 1));
      if (rest.compare(0, var.size(), var) != 0) throw Error(ErrorCode::ParseError, "bad term '" + term + "'");
      rest = rest.substr(var.size());
      if (rest.empty()) {
        e = 1;
      } else {
        if (rest[0] != '^') throw Error(ErrorCode::ParseError, "bad term '" + term + "'");
        try {
          std::size_t used = 0;
          e = std::stoi(rest.substr(1), &used);
          if (used != rest.size() - 1) throw Error(ErrorCode::ParseError, "bad exponent in '" + term + "'");
        } catch (const std::logic_error&) {
          throw Error(ErrorCode::ParseError, "bad exponent in '" + term + "'");
        }
      }
    }
    r += monomial(parse_rational(coef), e);
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return r;
}

// ------------------------------------------------------------- polynomial gcd

namespace {

// Ordinary polynomials (lowest exponent ≥ 0): a = q*b + r.
void poly_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly* q, LaurentPoly* r) {
  LaurentPoly rem = a, quo;
  int db = b.high_degree();
  const BigRational& lb = b.leading_coeff();
  while (!rem.is_zero() && rem.high_degree() >= db) {
    LaurentPoly m = LaurentPoly::monomial(rem.leading_coeff() / lb, rem.high_degree() - db);
    quo += m;
    rem -= m * b;
  }
  if (q) *q = std::move(quo);
  if (r) *r = std::move(rem);
}

LaurentPoly make_monic(LaurentPoly p) {
  if (p.is_zero()) return p;
  BigRational inv = 1 / p.leading_coeff();
  p *= inv;
  return p;
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  // both shifted to lowest exponent 0 first; the monomial parts divide separately
  int sa = a.low_degree(), sb = b.low_degree();
  LaurentPoly q, r;
  poly_divmod(a.shifted(-sa), b.shifted(-sb), &q, &r);
  if (!r.is_zero()) throw Error(ErrorCode::InternalInconsistency, "inexact polynomial division");
  return q.shifted(sa - sb);
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a0, const LaurentPoly& b0) {
  if (a0.is_zero()) return b0.is_zero() ? LaurentPoly(1) : make_monic(b0.shifted(-b0.low_degree()));
  if (b0.is_zero()) return make_monic(a0.shifted(-a0.low_degree()));
  LaurentPoly a = a0.shifted(-a0.low_degree()), b = b0.shifted(-b0.low_degree());
  if (a.high_degree() < b.high_degree()) std::swap(a, b);
  while (!b.is_zero()) {
    LaurentPoly r;
    poly_divmod(a, b, nullptr, &r);
    a = std::move(b);
    b = r.is_zero() ? r : make_monic(r.shifted(-r.low_degree()));
  }
  return make_monic(a);
}

// ------------------------------------------------------------ LaurentRational

LaurentRational::LaurentRational(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  normalize();
}

void LaurentRational::normalize() {
  if (den_.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  int d = den_.low_degree();
  if (d != 0) {
    den_ = den_.shifted(-d);
    num_ = num_.shifted(-d);
  }
  if (den_.is_constant()) {
    if (den_.coeff(0) != 1) {
      num_ *= BigRational(1 / den_.coeff(0));
      den_ = LaurentPoly(1);
    }
    return;
  }
  LaurentPoly g = poly_gcd(num_, den_);
  if (g.high_degree() > 0) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  BigRational lc = den_.leading_coeff();
  if (lc != 1) {
    BigRational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

LaurentRational& LaurentRational::operator+=(const LaurentRational& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_constant()) normalize();
    else if (num_.is_zero()) den_ = LaurentPoly(1);
    return *this;
  }
  LaurentPoly g = poly_gcd(den_, o.den_);
  LaurentPoly e1 = exact_div(den_, g), e2 = exact_div(o.den_, g);
  num_ = num_ * e2 + o.num_ * e1;
  den_ = den_ * e2;
  normalize();
  return *this;
}

LaurentRational& LaurentRational::operator-=(const LaurentRational& o) { return *this += -o; }

LaurentRational& LaurentRational::operator*=(const LaurentRational& o) {
  if (is_zero() || o.is_zero()) return *this = LaurentRational();
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ *= o.num_;
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

LaurentRational& LaurentRational::operator/=(const LaurentRational& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero rational function");
  LaurentPoly n = num_ * o.den_, d = den_ * o.num_;
  num_ = std::move(n);
  den_ = std::move(d);
  normalize();
  return *this;
}

LaurentRational LaurentRational::operator-() const {
  LaurentRational r = *this;
  r.num_ = -r.num_;
  return r;
}

LaurentRational LaurentRational::pow(int e) const {
  if (e < 0) return LaurentRational(1) / pow(-e);
  LaurentRational r(1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

LaurentRational LaurentRational::substitute(int k, const BigRational& c) const {
  return LaurentRational(num_.substitute(k, c), den_.substitute(k, c));
}

BigRational LaurentRational::eval(const BigRational& x) const {
  BigRational d = den_.eval(x);
  if (d == 0) throw Error(ErrorCode::PoleAtPoint, "denominator vanishes at " + x.get_str());
  return num_.eval(x) / d;
}

std::string LaurentRational::to_string(const std::string& var) const {
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

LaurentRational LaurentRational::parse(std::string_view text, const std::string& var) {
  std::string s = trim(text);
  std::size_t mid = s.find(")/(");
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')' && mid != std::string::npos) {
    return LaurentRational(LaurentPoly::parse(std::string_view(s).substr(1, mid - 1), var),
                           LaurentPoly::parse(std::string_view(s).substr(mid + 3, s.size() - mid - 4), var));
  }
  return LaurentRational(LaurentPoly::parse(s, var));
}

// ------------------------------------------------------------------ q-series

LaurentRational pochhammer(const LaurentRational& a, const LaurentRational& q, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "pochhammer needs n >= 0");
  LaurentRational r(1), qj(1);
  for (int j = 0; j < n; ++j) {
    r *= LaurentRational(1) - a * qj;
    qj *= q;
  }
  return r;
}

LaurentRational qbinomial(int n, int m) {
  if (m < 0) return LaurentRational();
  LaurentPoly num(1), den(1);
  for (int i = 1; i <= m; ++i) {
    num *= LaurentPoly(1) - LaurentPoly::monomial(1, n - m + i);
    den *= LaurentPoly(1) - LaurentPoly::monomial(1, i);
  }
  return LaurentRational(num, den);
}

}  // namespace hallmod
