#include "hallmod/identities.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "hallmod/basering.hpp"
#include "hallmod/error.hpp"
#include "hallmod/hallconst.hpp"
#include "hallmod/measures.hpp"
#include "hallmod/modlat.hpp"
#include "hallmod/symfunc.hpp"

namespace hallmod {

const char* to_string(CheckStatus s) { return s == CheckStatus::Pass ? "pass" : "fail"; }

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

IdentityCheck exact_check(std::string id, Params params, const BigRational& lhs, const BigRational& rhs) {
  IdentityCheck c{std::move(id), std::move(params), to_string(lhs), to_string(rhs), std::nullopt, "", CheckStatus::Fail};
  if (lhs == rhs) c.status = CheckStatus::Pass;
  return c;
}

std::string fmt(long double x) {
  std::ostringstream os;
  os.precision(15);
  os << x;
  return os.str();
}

std::string fmt_list(const std::vector<BigRational>& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + to_string(a[i]);
  return s + ")";
}

/// (a; t)_k at a numeric point.
BigRational poch(const BigRational& a, const BigRational& t, int k) {
  BigRational r = 1, x = a;
  for (int j = 0; j < k; ++j) {
    r *= 1 - x;
    x *= t;
  }
  return r;
}

BigRational qbinom(int n, int m, const BigRational& t) {
  if (m < 0) return 0;
  return qbinomial(n, m).eval(t);
}

// principal_skew with t formal and u ∈ {1, t}; the closed forms are reused across the test grids.
const LaurentRational& cached_principal(HLKind kind, const Partition& lambda, const Partition& mu, bool u_is_t) {
  static std::mutex m;
  static std::map<std::tuple<int, Partition, Partition, bool>, LaurentRational> cache;
  auto key = std::make_tuple(static_cast<int>(kind), lambda, mu, u_is_t);
  {
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  LaurentRational v = principal_skew(kind, lambda, mu, u_is_t ? LaurentRational::var() : LaurentRational(1));
  std::lock_guard<std::mutex> lock(m);
  return cache.emplace(key, std::move(v)).first->second;
}

std::vector<Partition> common_subpartitions(const Partition& a, const Partition& b) {
  std::vector<Partition> out;
  for (const auto& mu : iterate({std::min(a.weight(), b.weight()), -1, -1}))
    if (a.contains(mu) && b.contains(mu)) out.push_back(mu);
  return out;
}

int part(const Partition& l, int i) { return i < l.length() ? l[i] : 0; }

}  // namespace

IdentityCheck check_sum_of_skew(const Partition& lambda, const Partition& nu, const BigRational& t) {
  BigRational lhs = 0;
  for (const auto& mu : common_subpartitions(lambda, nu))
    lhs += cached_principal(HLKind::Q, lambda, mu, false).eval(t) * cached_principal(HLKind::P, nu, mu, true).eval(t);
  lhs /= cached_principal(HLKind::Q, lambda, Partition(), false).eval(t) *
         cached_principal(HLKind::P, nu, Partition(), true).eval(t);
  return exact_check("sum-of-skew", {{"lambda", lambda.to_string()}, {"nu", nu.to_string()}, {"t", to_string(t)}},
                     lhs, rational_pow(t, -conj_dot(lambda, nu)));
}

BigRational appendix_f(int n, int lambda1, int nu1, const BigRational& t) {
  BigRational f = 0;
  for (int m = 0; m <= nu1; ++m)
    f += rational_pow(t, -(m + n) * (lambda1 + nu1 - m + n)) * poch(rational_pow(t, 1 + lambda1 - m), t, m) *
         qbinom(nu1, m, t);
  return f;
}

IdentityCheck check_appendix_f(int n, int lambda1, int nu1, const BigRational& t) {
  return exact_check("appendix-f",
                     {{"n", std::to_string(n)}, {"lambda1", std::to_string(lambda1)}, {"nu1", std::to_string(nu1)},
                      {"t", to_string(t)}},
                     appendix_f(n, lambda1, nu1, t), rational_pow(t, -(lambda1 + n) * (nu1 + n)));
}

IdentityCheck check_appendix_f_step(int n, int lambda1, int nu1, const BigRational& t) {
  if (lambda1 < 1) throw Error(ErrorCode::InvalidArgument, "the induction step needs lambda1 >= 1");
  BigRational rhs = rational_pow(t, -n) * appendix_f(n, lambda1, nu1, t) +
                    (1 - rational_pow(t, lambda1)) * appendix_f(n + 1, lambda1 - 1, nu1, t);
  return exact_check("appendix-f-step",
                     {{"n", std::to_string(n)}, {"lambda1", std::to_string(lambda1)}, {"nu1", std::to_string(nu1)},
                      {"t", to_string(t)}},
                     appendix_f(n, lambda1, nu1 + 1, t), rhs);
}

IdentityCheck check_qbinomial_pascal(int nu1) {
  IdentityCheck c{"qbinomial-pascal", {{"nu1", std::to_string(nu1)}}, "", "", std::nullopt, "", CheckStatus::Pass};
  LaurentRational t = LaurentRational::var();
  for (int m = 0; m <= nu1 + 1; ++m) {
    LaurentRational lhs = qbinomial(nu1 + 1, m);
    LaurentRational rhs = t.pow(m) * qbinomial(nu1, m) + (m > 0 ? qbinomial(nu1, m - 1) : LaurentRational(0));
    if (!(lhs == rhs)) {
      c.status = CheckStatus::Fail;
      c.lhs = lhs.to_string();
      c.rhs = rhs.to_string();
      c.note = "m = " + std::to_string(m);
      return c;
    }
  }
  c.lhs = c.rhs = "equal for 0 <= m <= " + std::to_string(nu1 + 1);
  return c;
}

IdentityCheck check_conjugate_identity(const Partition& lambda, const Partition& nu, const BigRational& t) {
  int top = std::min(lambda.largest(), nu.largest());
  int len = std::max(lambda.length(), nu.length());
  BigRational lhs = 0;
  for (const auto& mu : iterate({top * len, top, len})) {
    int e = 0;
    BigRational term = 1;
    for (int i = 0; i < mu.length(); ++i) {
      int li = part(lambda, i), ni = part(nu, i), mi = mu[i], k = mi - part(mu, i + 1);
      e += mi * (li + ni - mi);
      term *= poch(rational_pow(t, 1 + li - mi), t, k) * poch(rational_pow(t, 1 + ni - mi), t, k) / poch(t, t, k);
    }
    lhs += rational_pow(t, -e) * term;
  }
  int d = 0;
  for (int i = 0; i < std::min(lambda.length(), nu.length()); ++i) d += lambda[i] * nu[i];
  return exact_check("conjugate-identity",
                     {{"lambda", lambda.to_string()}, {"nu", nu.to_string()}, {"t", to_string(t)}}, lhs,
                     rational_pow(t, -d));
}

IdentityCheck check_prop13(const std::vector<BigRational>& a, const BigRational& t, const Partition& nu, int L,
                           double tol) {
  if (t == 0 || abs(t) >= 1) throw Error(ErrorCode::DivergentMeasure, "t must satisfy 0 < |t| < 1");
  for (const auto& x : a)
    if (abs(x) >= 1) throw Error(ErrorCode::DivergentMeasure, "every |a_i| must be below 1");
  if (L < 0) throw Error(ErrorCode::InvalidArgument, "negative truncation");
  int k = static_cast<int>(a.size());
  BigRational norm = 1;
  for (const auto& x : a) norm *= 1 - x;

  BigRational lhs = 0, mass = 0;
  std::vector<Partition> support = k == 0 || L == 0 ? std::vector<Partition>{Partition()} : iterate({k * L, L, k});
  for (const auto& l : support) {
    BigRational w = eval_skew_chain(HLKind::P, l, Partition(), a, t) *
                    cached_principal(HLKind::Q, l, Partition(), false).eval(t) * norm;
    mass += w;
    lhs += w * rational_pow(t, -conj_dot(l, nu));
  }
  BigRational rhs = 0;
  for (const auto& mu : iterate({nu.weight(), -1, k})) {
    if (!nu.contains(mu)) continue;
    rhs += cached_principal(HLKind::P, nu, mu, true).eval(t) * eval_skew_chain(HLKind::P, mu, Partition(), a, t);
  }
  rhs /= cached_principal(HLKind::P, nu, Partition(), true).eval(t);

  // λ is drawn proportionally to the summands kept by the truncation
  lhs /= mass;
  long double l = to_double(lhs), r = to_double(rhs);
  IdentityCheck c{"prop1.3",
                  {{"a", fmt_list(a)}, {"t", to_string(t)}, {"nu", nu.to_string()}, {"L", std::to_string(L)}},
                  fmt(l),
                  to_string(rhs),
                  tol,
                  "unassigned mass " + fmt(to_double(1 - mass)),
                  CheckStatus::Fail};
  if (std::fabs(l - r) <= tol) c.status = CheckStatus::Pass;
  return c;
}

namespace {

// C_{ν/μ}(p) = P_μ(1,t,..) P_{ν/μ}(1,t,..) / P_ν(1,t,..) at t = 1/p.
BigRational subgroup_series_coeff(const Partition& nu, const Partition& mu, int p) {
  BigRational t(1, p);
  return cached_principal(HLKind::P, mu, Partition(), false).eval(t) *
         cached_principal(HLKind::P, nu, mu, false).eval(t) / cached_principal(HLKind::P, nu, Partition(), false).eval(t);
}

}  // namespace

IdentityCheck check_remark_series(const Partition& nu, int u, int p) {
  BigRational lhs = 0;
  for (const auto& mu : iterate({nu.weight(), -1, -1}))
    if (nu.contains(mu)) lhs += subgroup_series_coeff(nu, mu, p) * rational_pow(BigRational(p), -mu.weight() * u);
  return exact_check("remark-series", {{"nu", nu.to_string()}, {"u", std::to_string(u)}, {"p", std::to_string(p)}},
                     lhs, hom_moment_closed(Kind::Classical, u, nu, p));
}

IdentityCheck check_subgroup_count(const Partition& nu, const Partition& mu, int p) {
  long brute = 0;
  for (const auto& [types, n] : classical_table(nu, make_cyclic_ring(p, 1)))
    if (types.second == mu) brute += n;
  return exact_check("subgroup-count", {{"nu", nu.to_string()}, {"mu", mu.to_string()}, {"p", std::to_string(p)}},
                     subgroup_series_coeff(nu, mu, p), brute);
}

IdentityCheck check_hom_decomposition(const Partition& lambda, const Partition& nu, int p) {
  BigRational lhs = 0;
  for (const auto& mu : common_subpartitions(lambda, nu)) {
    long sur = count_homs(lambda, mu, p).sur, inj = count_homs(mu, nu, p).inj, aut = count_homs(mu, mu, p).sur;
    lhs += BigRational(sur) * inj / aut;
  }
  return exact_check("hom-decomposition",
                     {{"lambda", lambda.to_string()}, {"nu", nu.to_string()}, {"p", std::to_string(p)}}, lhs,
                     rational_pow(BigRational(p), conj_dot(lambda, nu)));
}

namespace {

IdentityCheck symbolic_check(std::string id, Params params, const SymPoly& lhs, const SymPoly& rhs) {
  bool same = lhs == rhs;
  IdentityCheck c{std::move(id), std::move(params), "", "", std::nullopt, "", same ? CheckStatus::Pass : CheckStatus::Fail};
  c.lhs = lhs.to_string();
  c.rhs = same ? c.lhs : rhs.to_string();
  return c;
}

std::vector<BigRational> sample_point(int n) {
  std::vector<BigRational> x;
  for (int i = 0; i < n; ++i) x.push_back(BigRational(i + 2, 2 * i + 5));
  return x;
}

}  // namespace

IdentityCheck check_hl_methods(const Partition& lambda, int n) {
  return symbolic_check("hl-definition-vs-branching", {{"lambda", lambda.to_string()}, {"n", std::to_string(n)}},
                        hl_p(lambda, n, HLMethod::Symmetrization), hl_p(lambda, n, HLMethod::Branching));
}

IdentityCheck check_stability(const Partition& lambda, int n) {
  return symbolic_check("hl-stability", {{"lambda", lambda.to_string()}, {"n", std::to_string(n)}},
                        hl_p(lambda, n + 1).restrict_vars(n), hl_p(lambda, n));
}

IdentityCheck check_skew_consistency(const Partition& lambda, int k, int n) {
  if (lambda.length() > n + k) throw Error(ErrorCode::LengthExceedsVars, "skew consistency needs ℓ(λ) <= n + k");
  auto pts = sample_point(n + k);
  std::vector<BigRational> xs(pts.begin(), pts.begin() + k), ys(pts.begin() + k, pts.end());
  IdentityCheck c{"skew-consistency",
                  {{"lambda", lambda.to_string()}, {"k", std::to_string(k)}, {"n", std::to_string(n)}},
                  "",
                  "",
                  std::nullopt,
                  "",
                  CheckStatus::Pass};
  for (const BigRational& t : {BigRational(1, 7), BigRational(-2, 5)}) {
    BigRational total = 0;
    for (const auto& m : iterate({lambda.weight(), -1, n}))
      if (lambda.contains(m)) total += skew(HLKind::P, lambda, m, k).eval(xs, t) * hl_p(m, n).eval(ys, t);
    BigRational direct = hl_p(lambda, n + k).eval(pts, t);
    c.lhs += (c.lhs.empty() ? "" : "; ") + to_string(total);
    c.rhs += (c.rhs.empty() ? "" : "; ") + to_string(direct);
    if (total != direct) c.status = CheckStatus::Fail;
  }
  c.note = "evaluated at t = 1/7 and t = -2/5";
  return c;
}

IdentityCheck check_skew_cauchy(const Partition& mu, const Partition& nu) {
  BigRational x(1, 3), y(1, 4), t(1, 5);
  BigRational lhs = 0;
  for (const auto& kappa : iterate({12, -1, 1 + std::max(mu.length(), nu.length())})) {
    if (!kappa.contains(mu) || !kappa.contains(nu)) continue;
    lhs += eval_skew_chain(HLKind::Q, kappa, mu, {y}, t) * eval_skew_chain(HLKind::P, kappa, nu, {x}, t);
  }
  BigRational rhs = 0;
  for (const auto& l : common_subpartitions(mu, nu))
    rhs += eval_skew_chain(HLKind::Q, nu, l, {y}, t) * eval_skew_chain(HLKind::P, mu, l, {x}, t);
  rhs *= cauchy_kernel({x}, {y}, t);
  double diff = std::fabs(to_double(lhs - rhs));
  IdentityCheck c{"skew-cauchy", {{"mu", mu.to_string()}, {"nu", nu.to_string()}, {"x", "1/3"}, {"y", "1/4"}, {"t", "1/5"}},
                  fmt(to_double(lhs)), fmt(to_double(rhs)), 1e-9, "kappa truncated at weight 12", CheckStatus::Fail};
  if (diff <= 1e-9) c.status = CheckStatus::Pass;
  return c;
}

// ---------------------------------------------------------------------------
// suites

namespace {

using Task = std::function<std::vector<IdentityCheck>()>;

std::vector<IdentityCheck> run_tasks(const std::string& suite, const std::vector<Task>& tasks, int parallelism) {
  std::vector<std::vector<IdentityCheck>> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) {
      try {
        out[i] = tasks[i]();
      } catch (const std::exception& e) {
        out[i] = {IdentityCheck{suite, {{"task", std::to_string(i)}}, "", "", std::nullopt, e.what(), CheckStatus::Fail}};
      }
    }
  };
  int extra = std::max(0, std::min<int>(parallelism, static_cast<int>(tasks.size())) - 1);
  std::vector<std::thread> pool;
  for (int i = 0; i < extra; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::vector<IdentityCheck> merged;
  for (auto& v : out)
    for (auto& c : v) merged.push_back(std::move(c));
  return merged;
}

template <class F>
Task single(F f) {
  return [f] { return std::vector<IdentityCheck>{f()}; };
}

int pick(int v, int d) { return v < 0 ? d : v; }
double pick(double v, double d) { return v < 0 ? d : v; }
long pick(long v, long d) { return v < 0 ? d : v; }
std::vector<int> pick(const std::vector<int>& v, std::vector<int> d) { return v.empty() ? d : v; }

std::vector<Task> hall_suite(Kind kind, const SuiteOptions& o) {
  bool her = kind == Kind::Hermitian;
  int w = pick(o.weight, kind == Kind::Classical ? 4 : 3);
  std::vector<int> primes = pick(o.primes, her ? std::vector<int>{3, 5} : std::vector<int>{2, 3});
  long bound = pick(o.size_bound, her ? 20000L : kDefaultSizeBound);
  int scale = her ? 2 : 1;
  std::vector<Task> tasks;
  for (const auto& mu : iterate({w / scale, -1, -1})) {
    for (const auto& nu : iterate({w - scale * mu.weight(), -1, -1})) {
      tasks.push_back([=] {
        std::vector<IdentityCheck> v;
        StructureConstantTable table = symbolic_constants(kind, mu, nu);
        Params base{{"kind", to_string(kind)}, {"mu", mu.to_string()}, {"nu", nu.to_string()}};
        for (const auto& [lambda, c] : table.entries) {
          Params ps = base;
          ps.push_back({"lambda", lambda.to_string()});
          bool ok = is_integer_polynomial(c);
          v.push_back({"integer-polynomial", ps, c.to_string("q"), "integer polynomial in q", std::nullopt, "",
                       ok ? CheckStatus::Pass : CheckStatus::Fail});
        }
        for (const auto& lambda : partitions_of(scale * mu.weight() + nu.weight())) {
          for (int p : primes) {
            Params ps = base;
            ps.push_back({"lambda", lambda.to_string()});
            ps.push_back({"p", std::to_string(p)});
            v.push_back(exact_check("hall-constant", ps, table.eval(lambda, p),
                                    bruteforce_constant(kind, mu, nu, lambda, p, bound)));
          }
        }
        return v;
      });
    }
  }
  return tasks;
}

std::vector<Task> thm12_suite(const SuiteOptions& o) {
  std::vector<int> qs = pick(o.primes, std::vector<int>{3});
  int L = pick(o.L, 16);
  double tol = pick(o.tol, 1e-5);
  std::vector<Task> tasks;
  for (Kind k : {Kind::Classical, Kind::Alternating, Kind::Hermitian}) {
    for (int q : qs) {
      if (k == Kind::Hermitian && q % 2 == 0) continue;
      for (int u : {0, 1}) {
        for (const auto& nu : {Partition{1}, Partition{2}, Partition{1, 1}}) {
          tasks.push_back(single([=] {
            UMeasureSpec spec{k, u, q, L};
            EmpiricalMoment e = hom_moment_empirical(spec, nu);
            BigRational exact = hom_moment_closed(k, u, nu, q);
            long double diff = std::fabs(e.value - static_cast<long double>(to_double(exact)));
            return IdentityCheck{"hom-moment",
                                 {{"kind", to_string(k)}, {"u", std::to_string(u)}, {"nu", nu.to_string()},
                                  {"q", std::to_string(q)}, {"L", std::to_string(L)}},
                                 fmt(e.value),
                                 to_string(exact),
                                 tol,
                                 "unassigned mass " + fmt(e.unassigned_mass),
                                 diff <= tol ? CheckStatus::Pass : CheckStatus::Fail};
          }));
        }
      }
    }
  }
  tasks.push_back(single([] {
    LaurentRational e = hom_moment_symbolic(Kind::Classical, 0, Partition{1});
    return IdentityCheck{"hom-moment-closed", {{"kind", "classical"}, {"u", "0"}, {"nu", "(1)"}}, e.to_string("q"), "2",
                         std::nullopt, "", e == LaurentRational(2) ? CheckStatus::Pass : CheckStatus::Fail};
  }));
  tasks.push_back(single([] {
    LaurentRational e = hom_moment_symbolic(Kind::Alternating, 0, Partition{1});
    LaurentRational want = 1 + LaurentRational::var();
    return IdentityCheck{"hom-moment-closed", {{"kind", "alternating"}, {"u", "0"}, {"nu", "(1)"}}, e.to_string("q"),
                         want.to_string("q"), std::nullopt, "", e == want ? CheckStatus::Pass : CheckStatus::Fail};
  }));
  return tasks;
}

std::vector<Task> prop13_suite(const SuiteOptions& o) {
  int L = pick(o.L, 14);
  double tol = pick(o.tol, 1e-5);
  BigRational t(1, 3);
  std::vector<Task> tasks;
  for (const auto& a : {std::vector<BigRational>{BigRational(1, 2)}, std::vector<BigRational>{BigRational(1, 2), BigRational(1, 4)}})
    for (const auto& nu : {Partition(), Partition{1}, Partition{2}, Partition{1, 1}})
      tasks.push_back(single([=] { return check_prop13(a, t, nu, L, tol); }));
  return tasks;
}

std::vector<Task> lemma52_suite(const SuiteOptions& o) {
  int w = pick(o.weight, 3);
  std::vector<int> primes = pick(o.primes, std::vector<int>{3});
  long bound = pick(o.size_bound, kDefaultSizeBound);
  std::vector<Task> tasks;
  for (int p : primes) {
    for (const auto& l : iterate({w, -1, -1})) {
      if (l.weight() == 0) continue;
      tasks.push_back(single([=] {
        int m = l.multiplicity(l.largest());
        BigRational q = p;
        BigRational formula = rational_pow(q, 2 * l.weight() - l.largest()) * (1 - rational_pow(-q, -m));
        return exact_check("norm-sphere", {{"lambda", l.to_string()}, {"p", std::to_string(p)}},
                           count_norm_sphere(l, p, bound), formula);
      }));
    }
  }
  return tasks;
}

const std::vector<BigRational>& skew_sum_ts() {
  static const std::vector<BigRational> ts{BigRational(1, 2), BigRational(1, 3), BigRational(3, 7), BigRational(-2, 5)};
  return ts;
}

std::vector<Task> lemma53_suite(const SuiteOptions& o) {
  int w = pick(o.weight, 6);
  std::vector<int> primes = pick(o.primes, std::vector<int>{2, 3});
  std::vector<Task> tasks;
  auto ps = iterate({w, -1, -1});
  for (const auto& l : ps) {
    tasks.push_back([=] {
      std::vector<IdentityCheck> v;
      for (const auto& nu : ps)
        for (const auto& t : skew_sum_ts()) v.push_back(check_sum_of_skew(l, nu, t));
      return v;
    });
  }
  auto small = iterate({std::min(w, 3), -1, -1});
  for (int p : primes)
    for (const auto& l : small)
      for (const auto& nu : small) tasks.push_back(single([=] { return check_hom_decomposition(l, nu, p); }));
  return tasks;
}

std::vector<Task> thm51_suite(const SuiteOptions& o) {
  int w = pick(o.weight, 6);
  int L = pick(o.L, 14);
  double tol = pick(o.tol, 1e-6);
  std::vector<Task> tasks;
  for (Kind k : {Kind::Classical, Kind::Alternating, Kind::Hermitian}) {
    std::vector<int> qs = pick(o.primes, k == Kind::Hermitian ? std::vector<int>{3, 5} : std::vector<int>{2, 3});
    for (int u = 0; u <= 2; ++u) {
      tasks.push_back([=] {
        std::vector<IdentityCheck> v;
        for (const auto& l : iterate({w, -1, -1})) {
          UProbForms f = u_prob_forms(k, u, l);
          Params base{{"kind", to_string(k)}, {"u", std::to_string(u)}, {"lambda", l.to_string()}};
          bool same = f.agree();
          v.push_back({"u-prob-forms", base, (f.aut_prefactor * f.aut_head).to_string("q"),
                       (f.hl_prefactor * f.hl_head).to_string("q"), std::nullopt, "",
                       same ? CheckStatus::Pass : CheckStatus::Fail});
          for (int q : qs) {
            if (k == Kind::Hermitian && q % 2 == 0) continue;
            Params ps = base;
            ps.push_back({"q", std::to_string(q)});
            v.push_back(exact_check("u-prob-prefactor", ps, f.aut_prefactor.eval(q), f.hl_prefactor.eval(q)));
          }
        }
        for (int q : qs) {
          if (k == Kind::Hermitian && q % 2 == 0) continue;
          MeasureTable t = measure_table({k, u, q, L});
          v.push_back({"truncated-mass",
                       {{"kind", to_string(k)}, {"u", std::to_string(u)}, {"q", std::to_string(q)}, {"L", std::to_string(L)}},
                       fmt(t.total),
                       "1",
                       tol,
                       "",
                       t.unassigned() <= tol ? CheckStatus::Pass : CheckStatus::Fail});
        }
        return v;
      });
    }
  }
  return tasks;
}

std::vector<Task> aut_suite(const SuiteOptions& o) {
  int w = pick(o.weight, 2);
  long bound = pick(o.size_bound, kDefaultSizeBound);
  std::vector<Task> tasks;
  for (Kind k : {Kind::Classical, Kind::Alternating, Kind::Hermitian}) {
    std::vector<int> primes = pick(o.primes, k == Kind::Hermitian ? std::vector<int>{3, 5} : std::vector<int>{2, 3});
    for (int p : primes) {
      if (k == Kind::Hermitian && p == 2) continue;
      for (const auto& l : iterate({w, -1, -1})) {
        if (l.weight() == 0) continue;
        tasks.push_back(single([=] {
          return exact_check("automorphisms", {{"kind", to_string(k)}, {"lambda", l.to_string()}, {"p", std::to_string(p)}},
                             count_paired_automorphisms(k, l, p, bound), aut_formula(k, l).eval(p));
        }));
      }
    }
  }
  return tasks;
}

std::vector<Task> appendix_suite(const SuiteOptions& o) {
  int w = pick(o.weight, 6);
  std::vector<Task> tasks;
  for (const BigRational& t : {BigRational(1, 2), BigRational(-1, 3)}) {
    tasks.push_back([=] {
      std::vector<IdentityCheck> v;
      for (int n = 0; n <= w; ++n)
        for (int l1 = 0; l1 <= w; ++l1)
          for (int n1 = 0; n1 <= w; ++n1) {
            v.push_back(check_appendix_f(n, l1, n1, t));
            if (l1 >= 1) v.push_back(check_appendix_f_step(n, l1, n1, t));
          }
      return v;
    });
  }
  for (int n1 = 0; n1 <= w; ++n1) tasks.push_back(single([=] { return check_qbinomial_pascal(n1); }));
  auto ps = iterate({std::min(w, 4), -1, -1});
  for (const auto& l : ps) {
    tasks.push_back([=] {
      std::vector<IdentityCheck> v;
      for (const auto& nu : ps) v.push_back(check_conjugate_identity(l, nu, BigRational(2, 5)));
      return v;
    });
  }
  return tasks;
}

std::vector<Task> skew_cauchy_suite(const SuiteOptions& o) {
  int w = pick(o.weight, 2);
  std::vector<Task> tasks;
  auto ps = iterate({w, -1, -1});
  for (const auto& mu : ps)
    for (const auto& nu : ps) tasks.push_back(single([=] { return check_skew_cauchy(mu, nu); }));
  return tasks;
}

std::vector<Task> remark_suite(const SuiteOptions& o) {
  int w = pick(o.weight, 3);
  std::vector<int> primes = pick(o.primes, std::vector<int>{2, 3});
  std::vector<Task> tasks;
  for (int p : primes) {
    for (const auto& nu : iterate({w, -1, -1})) {
      tasks.push_back([=] {
        std::vector<IdentityCheck> v;
        for (int u = 0; u <= 2; ++u) v.push_back(check_remark_series(nu, u, p));
        for (const auto& mu : iterate({nu.weight(), -1, -1}))
          if (nu.contains(mu)) v.push_back(check_subgroup_count(nu, mu, p));
        return v;
      });
    }
  }
  return tasks;
}

std::vector<Task> engine_suite(const SuiteOptions& o) {
  int w = pick(o.weight, 5);
  std::vector<Task> tasks;
  for (int n = 1; n <= w; ++n)
    for (const auto& l : iterate({w, -1, n})) tasks.push_back(single([=] { return check_hl_methods(l, n); }));
  for (int n = 1; n < w; ++n)
    for (const auto& l : iterate({w, -1, n})) tasks.push_back(single([=] { return check_stability(l, n); }));
  int sw = std::min(w, 4);
  for (const auto& l : iterate({sw, -1, -1}))
    for (int k = 1; k <= 2; ++k)
      for (int n = std::max(1, l.length() - k); n <= sw; ++n)
        tasks.push_back(single([=] { return check_skew_consistency(l, k, n); }));
  for (auto& t : skew_cauchy_suite({})) tasks.push_back(std::move(t));
  return tasks;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"classical-hall", "thm1.1-alt", "thm1.1-her", "thm1.2",
                                              "prop1.3",        "lemma5.2",   "lemma5.3",   "thm5.1",
                                              "thm5.4-aut",     "appendixA",  "skew-cauchy", "remark-series",
                                              "engine"};
  return names;
}

std::vector<IdentityCheck> run_suite(const std::string& name, const SuiteOptions& options) {
  std::vector<Task> tasks;
  if (name == "classical-hall") tasks = hall_suite(Kind::Classical, options);
  else if (name == "thm1.1-alt") tasks = hall_suite(Kind::Alternating, options);
  else if (name == "thm1.1-her") tasks = hall_suite(Kind::Hermitian, options);
  else if (name == "thm1.2") tasks = thm12_suite(options);
  else if (name == "prop1.3") tasks = prop13_suite(options);
  else if (name == "lemma5.2") tasks = lemma52_suite(options);
  else if (name == "lemma5.3") tasks = lemma53_suite(options);
  else if (name == "thm5.1") tasks = thm51_suite(options);
  else if (name == "thm5.4-aut") tasks = aut_suite(options);
  else if (name == "appendixA") tasks = appendix_suite(options);
  else if (name == "skew-cauchy") tasks = skew_cauchy_suite(options);
  else if (name == "remark-series") tasks = remark_suite(options);
  else if (name == "engine") tasks = engine_suite(options);
  else throw Error(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
  return run_tasks(name, tasks, std::max(1, options.parallelism));
}

}  // namespace hallmod
