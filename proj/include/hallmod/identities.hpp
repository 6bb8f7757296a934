#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hallmod/exactalg.hpp"
#include "hallmod/kind.hpp"
#include "hallmod/partitions.hpp"

namespace hallmod {

enum class CheckStatus { Pass, Fail };
const char* to_string(CheckStatus s);

/* One finite instance of an identity. Exact checks compare lhs and rhs as
   rationals (or polynomials); numeric ones pass when |lhs - rhs| <= bound. */
struct IdentityCheck {
  std::string id;
  std::vector<std::pair<std::string, std::string>> params;
  std::string lhs, rhs;
  std::optional<double> bound;
  std::string note;
  CheckStatus status = CheckStatus::Fail;

  bool passed() const { return status == CheckStatus::Pass; }
};

/// Σ_μ Q_{λ/μ}(1,t,..) P_{ν/μ}(t,t²,..) / (Q_λ(1,t,..) P_ν(t,t²,..)) = t^{-Σ λ'_i ν'_i}.
IdentityCheck check_sum_of_skew(const Partition& lambda, const Partition& nu, const BigRational& t);

/// f(n; λ1, ν1) from its defining sum.
BigRational appendix_f(int n, int lambda1, int nu1, const BigRational& t);
/// f(n; λ1, ν1) = t^{-(λ1+n)(ν1+n)}.
IdentityCheck check_appendix_f(int n, int lambda1, int nu1, const BigRational& t);
/// f(n; λ1, ν1+1) = t^{-n} f(n; λ1, ν1) + (1 - t^{λ1}) f(n+1; λ1-1, ν1), for λ1 >= 1.
IdentityCheck check_appendix_f_step(int n, int lambda1, int nu1, const BigRational& t);
/// [ν+1, m]_t = t^m [ν, m]_t + [ν, m-1]_t for 0 <= m <= ν+1, with t formal.
IdentityCheck check_qbinomial_pascal(int nu1);

/// The conjugate form of the skew sum, summed directly over μ.
IdentityCheck check_conjugate_identity(const Partition& lambda, const Partition& nu, const BigRational& t);

/* E[t^{-Σ λ'_i ν'_i}] under the measure ∝ P_λ(a) Q_λ(1,t,..) restricted to
   λ1 <= L (ℓ(λ) <= |a| automatically), against P_ν(a ∪ (t,t²,..))/P_ν(t,t²,..).
   The note reports the mass outside the truncation, measured against the exact
   normalization Π_t(a; 1,t,..) = Π 1/(1 - a_i). Throws
   DivergentMeasure unless every |a_i| < 1 and 0 < |t| < 1. */
IdentityCheck check_prop13(const std::vector<BigRational>& a, const BigRational& t, const Partition& nu, int L,
                           double tol);

/// Σ_{μ⊆ν} C_{ν/μ}(p) p^{-|μ|u} against the closed no-pairing Hom moment.
IdentityCheck check_remark_series(const Partition& nu, int u, int p);
/// C_{ν/μ}(p) against the number of subgroups of type μ in the group of type ν.
IdentityCheck check_subgroup_count(const Partition& nu, const Partition& mu, int p);

/// Σ_μ #Sur(G_λ,G_μ) #Inj(G_μ,G_ν) / #Aut(G_μ) = p^{Σ λ'_i ν'_i}, all counts by brute force.
IdentityCheck check_hom_decomposition(const Partition& lambda, const Partition& nu, int p);

// Symmetric-function engine checks.
IdentityCheck check_hl_methods(const Partition& lambda, int n);
IdentityCheck check_stability(const Partition& lambda, int n);
IdentityCheck check_skew_consistency(const Partition& lambda, int k, int n);
/// Skew Cauchy identity with x = (1/3), y = (1/4), t = 1/5, κ truncated at weight 12.
IdentityCheck check_skew_cauchy(const Partition& mu, const Partition& nu);

/* Suite parameters. Negative or empty fields take the suite's default:
   the weight bound, primes, truncation L, tolerance and modlat size bound. */
struct SuiteOptions {
  int weight = -1;
  std::vector<int> primes;
  int L = -1;
  double tol = -1;
  long size_bound = -1;
  int parallelism = 1;
};

/// classical-hall, thm1.1-alt, thm1.1-her, thm1.2, prop1.3, lemma5.2, lemma5.3, thm5.1,
/// thm5.4-aut, appendixA, skew-cauchy, remark-series, engine.
const std::vector<std::string>& suite_names();
/// Runs every check of a suite; the result order does not depend on parallelism.
/// Throws InvalidArgument for an unknown suite.
std::vector<IdentityCheck> run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace hallmod
