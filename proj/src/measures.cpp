#include "hallmod/measures.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hallmod/error.hpp"
#include "hallmod/symfunc.hpp"

namespace hallmod {

namespace {

LaurentRational q_pow(int e, const BigRational& c = 1) { return LaurentRational::monomial(c, e); }

LaurentRational s_to_q(const LaurentRational& f) { return f.substitute(-1, 1); }

// Hall-Littlewood parameter as a map from s = 1/q, and the first variable of ρ1.
struct MeasureShape {
  ParamMap param;
  int z_power;  // ρ1 starts at s^{z_power}
};

MeasureShape shape(Kind kind, int u) {
  switch (kind) {
    case Kind::Classical: return {ParamMap::identity(), 1 + u};
    case Kind::Alternating: return {ParamMap{2, 1}, 1 + 2 * u};
    case Kind::Hermitian: return {ParamMap{1, -1}, 1 + u};
  }
  return {ParamMap::identity(), 1 + u};
}

void check_u(int u) {
  if (u < 0) throw Error(ErrorCode::InvalidArgument, "u must be a nonnegative integer");
}

}  // namespace

LaurentRational aut_formula(Kind kind, const Partition& lambda) {
  int n = lambda.nlambda(), w = lambda.weight();
  LaurentRational r;
  LaurentRational x;
  switch (kind) {
    case Kind::Classical:
      r = q_pow(2 * n + w);
      x = q_pow(-1);
      break;
    case Kind::Alternating:
      r = q_pow(4 * n + 3 * w);
      x = q_pow(-2);
      break;
    case Kind::Hermitian:
      r = q_pow(w + 2 * n);
      x = q_pow(-1, -1);
      break;
  }
  for (const auto& [part, m] : lambda.multiplicities()) r *= pochhammer(x, x, m);
  return r;
}

UProbForms u_prob_forms(Kind kind, int u, const Partition& lambda) {
  check_u(u);
  UProbForms f;
  int w = lambda.weight();
  switch (kind) {
    case Kind::Classical: f.aut_prefactor = q_pow(-u * w) / aut_formula(kind, lambda); break;
    case Kind::Alternating: f.aut_prefactor = q_pow((2 - 2 * u) * w) / aut_formula(kind, lambda); break;
    case Kind::Hermitian: f.aut_prefactor = q_pow(-u * w) / aut_formula(kind, lambda); break;
  }
  MeasureShape sh = shape(kind, u);
  LaurentRational z = LaurentRational::monomial(1, sh.z_power);
  LaurentRational pq = principal_skew(HLKind::P, lambda, Partition(), z, sh.param) *
                       principal_skew(HLKind::Q, lambda, Partition(), 1, sh.param);
  f.hl_prefactor = s_to_q(pq);

  f.head_length = lambda.largest() + u + 1;
  f.aut_head = 1;
  for (int j = 1; j <= f.head_length; ++j) {
    switch (kind) {
      case Kind::Classical: f.aut_head *= 1 - q_pow(-u - j); break;
      case Kind::Alternating: f.aut_head *= 1 - q_pow(-2 * u - 2 * j + 1); break;
      case Kind::Hermitian: f.aut_head *= 1 - q_pow(-u - j, j % 2 ? 1 : -1); break;
    }
  }
  // Π_T(ρ1; 1, T, ...) = 1/(z; T)_∞ for geometric ρ1 starting at z
  f.hl_head = s_to_q(pochhammer(z, sh.param.t(), f.head_length));
  return f;
}

TailProduct u_tail(Kind kind, int u, const BigRational& q) {
  BigRational s = 1 / q;
  switch (kind) {
    case Kind::Classical: return {rational_pow(s, 1 + u), s};
    case Kind::Alternating: return {rational_pow(s, 1 + 2 * u), s * s};
    case Kind::Hermitian: return {rational_pow(s, 1 + u), -s};
  }
  return {0, 0};
}

BoundedReal q_pochhammer_inf(long double z, long double T, long double tol) {
  long double aT = std::fabs(T);
  if (aT >= 1) throw Error(ErrorCode::DivergentProduct, "infinite product needs |T| < 1");
  long double v = 1, x = z;
  while (std::fabs(x) >= tol * (1 - aT)) {
    v *= 1 - x;
    x *= T;
  }
  long double r = std::fabs(x);
  // |log Π_{k≥j}(1 - x_k)| ≤ Σ |x_k|/(1 - |x_k|) ≤ r/((1 - |T|)(1 - r))
  long double b = r / ((1 - aT) * (1 - r));
  return {v, std::fabs(v) * std::expm1(b)};
}

UProbValue u_prob(const UMeasureSpec& spec, const Partition& lambda) {
  UProbForms f = u_prob_forms(spec.kind, spec.u, lambda);
  BigRational a = f.aut_prefactor.eval(spec.q), h = f.hl_prefactor.eval(spec.q);
  if (!f.agree() || a != h)
    throw Error(ErrorCode::FormMismatch, "u-probability forms differ at " + lambda.to_string());
  TailProduct t = u_tail(spec.kind, spec.u, spec.q);
  BoundedReal tail = q_pochhammer_inf(to_double(t.z), to_double(t.T), spec.tol);
  long double p = static_cast<long double>(to_double(a));
  return {a, {p * tail.value, std::fabs(p) * tail.error}};
}

namespace {

// Prefactor of P(u; λ) in long double, straight from the automorphism formula.
long double prefactor_ld(Kind kind, int u, const Partition& lambda, long double q) {
  int n = lambda.nlambda(), w = lambda.weight();
  long double x = 1 / q, e = 0;
  switch (kind) {
    case Kind::Classical: e = -u * w - (2 * n + w); break;
    case Kind::Alternating: e = (2 - 2 * u) * w - (4 * n + 3 * w); x = x * x; break;
    case Kind::Hermitian: e = -u * w - (w + 2 * n); x = -x; break;
  }
  long double r = std::pow(q, e);
  for (const auto& [part, m] : lambda.multiplicities()) {
    long double xk = 1;
    for (int k = 1; k <= m; ++k) {
      xk *= x;
      r /= 1 - xk;
    }
  }
  return r;
}

}  // namespace

std::vector<Partition> truncation_support(const UMeasureSpec& spec) {
  if (spec.L < 0) throw Error(ErrorCode::InvalidArgument, "negative truncation");
  if (spec.L == 0) return {Partition()};
  int w = spec.max_weight < 0 ? 2 * spec.L : spec.max_weight;
  return iterate({w, spec.L, spec.L});
}

MeasureTable measure_table(const UMeasureSpec& spec) {
  check_u(spec.u);
  if (spec.q <= 1) throw Error(ErrorCode::DivergentMeasure, "q must exceed 1");
  long double q = to_double(spec.q);
  TailProduct t = u_tail(spec.kind, spec.u, spec.q);
  long double tail = q_pochhammer_inf(to_double(t.z), to_double(t.T), 1e-18L).value;
  MeasureTable table;
  for (const auto& l : truncation_support(spec)) {
    long double p = prefactor_ld(spec.kind, spec.u, l, q) * tail;
    table.total += p;
    table.rows.push_back({l, p, table.total});
  }
  return table;
}

BigRational hom_count(Kind kind, const Partition& lambda, const Partition& nu, const BigRational& q) {
  int d = conj_dot(lambda, nu);
  return rational_pow(q, kind == Kind::Classical ? d : 2 * d);
}

LaurentRational hom_moment_symbolic(Kind kind, int u, const Partition& nu) {
  check_u(u);
  MeasureShape sh = shape(kind, u);
  // ρ1 ∪ (T, T^2, ...) over (T, T^2, ...), read as a union of two geometric tails
  LaurentRational u1 = LaurentRational::monomial(1, sh.z_power), u2 = sh.param.t();
  Partition kappa = kind == Kind::Hermitian ? double_interleave(nu) : nu;
  LaurentRational num = two_tail_spec(kappa, u1, u2, sh.param);
  LaurentRational den = principal_skew(HLKind::P, kappa, Partition(), u2, sh.param);
  return s_to_q(num / den);
}

BigRational hom_moment_closed(Kind kind, int u, const Partition& nu, const BigRational& q) {
  return hom_moment_symbolic(kind, u, nu).eval(q);
}

EmpiricalMoment hom_moment_empirical(const UMeasureSpec& spec, const Partition& nu) {
  MeasureTable table = measure_table(spec);
  long double q = to_double(spec.q);
  EmpiricalMoment m;
  for (const auto& row : table.rows) {
    int d = conj_dot(row.lambda, nu);
    m.value += row.prob * std::pow(q, static_cast<long double>(spec.kind == Kind::Classical ? d : 2 * d));
  }
  m.unassigned_mass = table.unassigned();
  return m;
}

std::vector<Partition> sample(const UMeasureSpec& spec, std::uint64_t seed, int count) {
  MeasureTable table = measure_table(spec);
  if (table.unassigned() > spec.tol)
    throw Error(ErrorCode::InsufficientMass, "truncation leaves " + std::to_string(static_cast<double>(table.unassigned())) +
                                                 " of the mass unassigned");
  std::mt19937_64 rng(seed);
  std::vector<Partition> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    long double x = static_cast<long double>(rng() >> 11) * 0x1.0p-53L * table.total;
    auto it = std::upper_bound(table.rows.begin(), table.rows.end(), x,
                               [](long double v, const MeasureRow& r) { return v < r.cumprob; });
    if (it == table.rows.end()) --it;
    out.push_back(it->lambda);
  }
  return out;
}

}  // namespace hallmod
