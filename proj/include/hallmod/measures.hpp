#pragma once

#include <cstdint>
#include <vector>

#include "hallmod/exactalg.hpp"
#include "hallmod/kind.hpp"
#include "hallmod/partitions.hpp"

namespace hallmod {

/* u-probability measure. Kind::Classical is the no-pairing measure. The
   support is truncated to λ1 ≤ L, ℓ(λ) ≤ L and |λ| ≤ max_weight (2L when
   negative). */
struct UMeasureSpec {
  Kind kind = Kind::Classical;
  int u = 0;
  BigRational q = 2;
  int L = 10;
  int max_weight = -1;
  double tol = 1e-6;
};

/// #Aut, #Aut^A or #Aut^H of the module of type λ, as a Laurent polynomial in q.
LaurentRational aut_formula(Kind kind, const Partition& lambda);

/* Both closed forms of P(u; λ) as functions of q. Each is a prefactor times
   (z; T)_∞; the heads hold the first J = λ1 + u + 1 factors of that product,
   built from the Aut-based definition and from the Cauchy kernel respectively. */
struct UProbForms {
  LaurentRational aut_prefactor, hl_prefactor;
  LaurentRational aut_head, hl_head;
  int head_length = 0;
  bool agree() const { return aut_prefactor == hl_prefactor && aut_head == hl_head; }
};
UProbForms u_prob_forms(Kind kind, int u, const Partition& lambda);

/// z and T of the product (z;T)_∞ shared by both forms, at numeric q.
struct TailProduct {
  BigRational z, T;
};
TailProduct u_tail(Kind kind, int u, const BigRational& q);

struct BoundedReal {
  long double value = 0;
  long double error = 0;
};
/// (z;T)_∞ truncated once |z T^j| < tol·(1 − |T|).
BoundedReal q_pochhammer_inf(long double z, long double T, long double tol);

struct UProbValue {
  BigRational prefactor;  // exact, both forms checked equal at this q
  BoundedReal prob;
};
/// Throws FormMismatch when the two closed forms disagree.
UProbValue u_prob(const UMeasureSpec& spec, const Partition& lambda);

struct MeasureRow {
  Partition lambda;
  long double prob = 0;
  long double cumprob = 0;
};
struct MeasureTable {
  std::vector<MeasureRow> rows;  // deterministic partition order
  long double total = 0;
  long double unassigned() const { return 1 - total; }
};
std::vector<Partition> truncation_support(const UMeasureSpec& spec);
MeasureTable measure_table(const UMeasureSpec& spec);

/// #Hom(M_λ, M_ν) for M_λ of the given kind and M_ν a plain module.
BigRational hom_count(Kind kind, const Partition& lambda, const Partition& nu, const BigRational& q);

/// Closed form of E[#Hom(M, M_ν)] as a rational function of q.
LaurentRational hom_moment_symbolic(Kind kind, int u, const Partition& nu);
BigRational hom_moment_closed(Kind kind, int u, const Partition& nu, const BigRational& q);

struct EmpiricalMoment {
  long double value = 0;
  long double unassigned_mass = 0;
};
EmpiricalMoment hom_moment_empirical(const UMeasureSpec& spec, const Partition& nu);

/// Inverse-CDF draws over the truncated support. Throws InsufficientMass when
/// more than spec.tol of the mass is outside the truncation.
std::vector<Partition> sample(const UMeasureSpec& spec, std::uint64_t seed, int count);

}  // namespace hallmod
