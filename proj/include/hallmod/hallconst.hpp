#pragma once

#include <map>
#include <string>
#include <vector>

#include "hallmod/exactalg.hpp"
#include "hallmod/kind.hpp"
#include "hallmod/modlat.hpp"
#include "hallmod/partitions.hpp"

namespace hallmod {

/// Coefficients of u_μ * u_ν (ν a module basis element for the paired kinds), as polynomials in q.
struct StructureConstantTable {
  Kind kind = Kind::Classical;
  Partition mu, nu;
  std::map<Partition, LaurentRational> entries;  // polynomials in q

  /// Value at q, zero for absent λ.
  BigRational eval(const Partition& lambda, const BigRational& q) const;
};

/// Largest accepted weight of λ for the symbolic path.
inline constexpr int kMaxSymbolicWeight = 8;

/* Computes the product of the images in Λ_n and expands it in the image basis.
   Classical: ψ(u_λ) = q^{-n(λ)} P_λ(x; q^{-1}).
   Alternating: φ(u_μ) = q^{|μ|-n(μ)} P_μ(x1, x1/q, x2, x2/q, ...; q^{-1}), φ^alt(u_ν) = q^{-2n(ν)} P_ν(x; q^{-2}).
   Hermitian: φ(u_μ) = q^{-2n(μ)} P_μ(x²; q^{-2}), φ^her(u_ν) = (-q)^{-n(ν)} P_ν(x; -q^{-1}).
   Throws BoundExceeded past kMaxSymbolicWeight. */
StructureConstantTable symbolic_constants(Kind kind, const Partition& mu, const Partition& nu);

/// True when f is a polynomial in q with integer coefficients.
bool is_integer_polynomial(const LaurentRational& f);
/// Ascending coefficients of an integer polynomial; throws InternalInconsistency otherwise.
std::vector<long> poly_coefficients(const LaurentRational& f);

/// Direct subgroup count; Hermitian constants are evaluated at q = p.
long bruteforce_constant(Kind kind, const Partition& mu, const Partition& nu, const Partition& lambda, int p,
                         long size_bound = kDefaultSizeBound);

struct ConstantMismatch {
  Partition mu, nu, lambda;
  int p = 0;
  std::string symbolic;  // value at q = p, or a reason
  long brute = 0;
};

struct VerifyReport {
  Kind kind = Kind::Classical;
  long checks = 0;
  std::vector<ConstantMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/* For all (μ, ν) within the weight bound (|μ|+|ν| classical/alternating,
   2|μ|+|ν| Hermitian) and every λ, compares symbolic entries at q = p with
   brute-force counts; also records non-polynomial entries. */
VerifyReport verify_kind(Kind kind, int weight_bound, const std::vector<int>& primes,
                         long size_bound = kDefaultSizeBound);

/// u_{μ2} * (u_{μ1} * u_ν) against (u_{μ2} u_{μ1}) * u_ν, coefficientwise in q.
bool check_associativity(Kind kind, const Partition& mu1, const Partition& mu2, const Partition& nu);

}  // namespace hallmod
