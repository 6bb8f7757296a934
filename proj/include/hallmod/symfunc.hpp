#pragma once

#include <map>
#include <string>
#include <vector>

#include "hallmod/exactalg.hpp"
#include "hallmod/partitions.hpp"

namespace hallmod {

/* Substitution of the Hall-Littlewood parameter, t -> scale * s^power, where s
   is the single formal variable carried by LaurentRational. The identity map
   leaves t formal. */
struct ParamMap {
  int power = 1;
  BigRational scale = 1;

  static ParamMap identity() { return {}; }
  LaurentRational t() const { return LaurentRational::monomial(scale, power); }
  LaurentRational apply(const LaurentRational& f) const;
  bool is_identity() const { return power == 1 && scale == 1; }
  bool operator==(const ParamMap&) const = default;
};

/// Symmetric polynomial in nvars variables, stored in the monomial basis m_λ.
class SymPoly {
 public:
  explicit SymPoly(int nvars = 1);
  static SymPoly constant(int nvars, const LaurentRational& c);
  static SymPoly monomial(int nvars, const Partition& lambda, const LaurentRational& c = 1);

  int nvars() const { return nvars_; }
  const std::map<Partition, LaurentRational>& terms() const { return terms_; }
  LaurentRational coeff(const Partition& lambda) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Partition& lambda, const LaurentRational& c);

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly& operator*=(const LaurentRational& c);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(SymPoly a, const LaurentRational& c) { return a *= c; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  bool operator==(const SymPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  /// Applies the parameter substitution to every coefficient.
  SymPoly map_param(const ParamMap& p) const;
  /// m_λ(x_1^2, ..., x_n^2) = m_{2λ}(x)
  SymPoly squared_variables() const;
  /// Sets x_{n+1} = ... = 0.
  SymPoly restrict_vars(int n) const;
  /// Same polynomial viewed in more variables (only valid when nothing would be dropped).
  SymPoly with_nvars(int n) const;

  /// Numeric value at x (|x| = nvars) with the parameter set to t.
  BigRational eval(const std::vector<BigRational>& x, const BigRational& t) const;

  std::string to_string() const;

 private:
  int nvars_;
  std::map<Partition, LaurentRational> terms_;
};

/// m_α(x_1, ..., x_n) as an explicit map from exponent vectors (distinct rearrangements).
std::vector<std::vector<int>> distinct_rearrangements(const Partition& alpha, int n);

/* Substitutes the 2n variables of f by (x_1, r x_1, x_2, r x_2, ..., x_n, r x_n),
   returning a symmetric polynomial in n variables. */
SymPoly pair_substitute(const SymPoly& f, const LaurentRational& r);

enum class HLKind { P, Q };
enum class HLMethod { Branching, Symmetrization };

/// Π_i (t;t)_{m_i(λ)}, the factor with Q_λ = b_λ P_λ.
LaurentRational b_lambda(const Partition& lambda);
/// Π_{i≥0} (t;t)_{m_i}/(1-t)^{m_i} in n variables, with m_0 = n - ℓ(λ).
LaurentRational v_lambda(const Partition& lambda, int n);

/* Hall-Littlewood P_λ(x_1..x_n; t) with t formal. Symmetrization expands the
   defining sum over S_n; Branching chains single-variable horizontal strips. */
SymPoly hl_p(const Partition& lambda, int n, HLMethod method = HLMethod::Branching);
SymPoly hl_q(const Partition& lambda, int n, HLMethod method = HLMethod::Branching);

/// Single-variable coefficients: P_{λ/μ}(x) = psi x^{|λ/μ|}, Q_{λ/μ}(x) = phi x^{|λ/μ|}.
LaurentRational psi_strip(const Partition& lambda, const Partition& mu);
LaurentRational phi_strip(const Partition& lambda, const Partition& mu);

/* Skew P_{λ/μ} / Q_{λ/μ} in k variables, obtained by solving
   P_λ(x, y) = Σ_μ P_{λ/μ}(x) P_μ(y) against the HL basis in y (n = |λ| variables). */
SymPoly skew(HLKind kind, const Partition& lambda, const Partition& mu, int k,
             HLMethod inner = HLMethod::Branching);
/// Same quantity from iterated single-variable branching.
SymPoly skew_branching(HLKind kind, const Partition& lambda, const Partition& mu, int k);

struct HLExpansion {
  ParamMap param;
  int nvars = 1;
  std::map<Partition, LaurentRational> coeffs;

  SymPoly reconstruct() const;
};

/// Coefficients of f in the basis P_λ(x; param(s)), by back-substitution from the lex-largest term.
HLExpansion expand_in_hl(const SymPoly& f, const ParamMap& param = ParamMap::identity());

/// P_{λ/μ} or Q_{λ/μ} at (u, u t, u t^2, ...) in closed form; t = param(s).
LaurentRational principal_skew(HLKind kind, const Partition& lambda, const Partition& mu,
                               const LaurentRational& u, const ParamMap& param = ParamMap::identity());

/// P_ν on the union of u1·(1,t,t^2,...) and u2·(1,t,t^2,...).
LaurentRational two_tail_spec(const Partition& nu, const LaurentRational& u1, const LaurentRational& u2,
                              const ParamMap& param = ParamMap::identity());

/// Π_{i,j} (1 - t x_i y_j)/(1 - x_i y_j) over finite lists.
BigRational cauchy_kernel(const std::vector<BigRational>& x, const std::vector<BigRational>& y,
                          const BigRational& t);

struct BoundedValue {
  BigRational value;
  BigRational error_bound;
};

/* Π_t(u1·(1,t,..); u2·(1,t,..)). The double product telescopes to
   1/(u1 u2; t)_∞, which is truncated once the next log-factor drops below tol/10. */
BoundedValue cauchy_kernel_geometric(const BigRational& u1, const BigRational& u2, const BigRational& t,
                                     const BigRational& tol);

/// Numeric P_{λ/μ}(x_1..x_k; t) by summing over strip chains; used as an oracle.
BigRational eval_skew_chain(HLKind kind, const Partition& lambda, const Partition& mu,
                            const std::vector<BigRational>& x, const BigRational& t);

}  // namespace hallmod
