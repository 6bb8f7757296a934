#include "hallmod/symfunc.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

#include "hallmod/error.hpp"

namespace hallmod {

LaurentRational ParamMap::apply(const LaurentRational& f) const {
  if (is_identity()) return f;
  return f.substitute(power, scale);
}

// -------------------------------------------------------------------- SymPoly

SymPoly::SymPoly(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw Error(ErrorCode::InvalidArgument, "negative variable count");
}

SymPoly SymPoly::constant(int nvars, const LaurentRational& c) {
  SymPoly p(nvars);
  p.add_term(Partition(), c);
  return p;
}

SymPoly SymPoly::monomial(int nvars, const Partition& lambda, const LaurentRational& c) {
  SymPoly p(nvars);
  p.add_term(lambda, c);
  return p;
}

LaurentRational SymPoly::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? LaurentRational() : it->second;
}

void SymPoly::add_term(const Partition& lambda, const LaurentRational& c) {
  if (lambda.length() > nvars_)
    throw Error(ErrorCode::LengthExceedsVars, lambda.to_string() + " in " + std::to_string(nvars_) + " variables");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(lambda, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  if (o.nvars_ != nvars_) throw Error(ErrorCode::InvalidArgument, "variable count mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  if (o.nvars_ != nvars_) throw Error(ErrorCode::InvalidArgument, "variable count mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

SymPoly& SymPoly::operator*=(const LaurentRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

std::vector<std::vector<int>> distinct_rearrangements(const Partition& alpha, int n) {
  if (alpha.length() > n) return {};
  std::vector<int> v(n, 0);
  for (int i = 0; i < alpha.length(); ++i) v[i] = alpha[i];
  std::sort(v.begin(), v.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

namespace {

using ProductTable = std::map<Partition, long>;

// m_α m_β = Σ_γ c_γ m_γ where c_γ counts pairs of rearrangements summing to γ.
const ProductTable& monomial_product(const Partition& a, const Partition& b, int n) {
  static std::mutex mu;
  static std::map<std::tuple<Partition, Partition, int>, ProductTable> cache;
  auto key = std::make_tuple(std::min(a, b), std::max(a, b), n);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  ProductTable table;
  auto ra = distinct_rearrangements(a, n), rb = distinct_rearrangements(b, n);
  std::vector<int> s(n);
  for (const auto& x : ra) {
    for (const auto& y : rb) {
      bool sorted = true;
      for (int i = 0; i < n; ++i) {
        s[i] = x[i] + y[i];
        if (i > 0 && s[i] > s[i - 1]) {
          sorted = false;
          break;
        }
      }
      if (sorted) ++table[Partition(s)];
    }
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(table)).first->second;
}

}  // namespace

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  if (a.nvars_ != b.nvars_) throw Error(ErrorCode::InvalidArgument, "variable count mismatch");
  SymPoly r(a.nvars_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      LaurentRational c = ca * cb;
      for (const auto& [kg, count] : monomial_product(ka, kb, a.nvars_)) r.add_term(kg, c * LaurentRational(count));
    }
  }
  return r;
}

SymPoly SymPoly::map_param(const ParamMap& p) const {
  if (p.is_identity()) return *this;
  SymPoly r(nvars_);
  for (const auto& [k, c] : terms_) r.add_term(k, p.apply(c));
  return r;
}

SymPoly SymPoly::squared_variables() const {
  SymPoly r(nvars_);
  for (const auto& [k, c] : terms_) {
    std::vector<int> d = k.parts();
    for (int& x : d) x *= 2;
    r.add_term(Partition(d), c);
  }
  return r;
}

SymPoly SymPoly::restrict_vars(int n) const {
  SymPoly r(n);
  for (const auto& [k, c] : terms_)
    if (k.length() <= n) r.add_term(k, c);
  return r;
}

SymPoly SymPoly::with_nvars(int n) const {
  SymPoly r(n);
  for (const auto& [k, c] : terms_) r.add_term(k, c);
  return r;
}

BigRational SymPoly::eval(const std::vector<BigRational>& x, const BigRational& t) const {
  if (static_cast<int>(x.size()) != nvars_) throw Error(ErrorCode::InvalidArgument, "wrong number of values");
  BigRational total = 0;
  for (const auto& [k, c] : terms_) {
    BigRational m = 0;
    for (const auto& e : distinct_rearrangements(k, nvars_)) {
      BigRational term = 1;
      for (int i = 0; i < nvars_; ++i)
        if (e[i]) term *= rational_pow(x[i], e[i]);
      m += term;
    }
    total += c.eval(t) * m;
  }
  return total;
}

std::string SymPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second.to_string() << "*m" << it->first.to_string();
  }
  return os.str();
}

SymPoly pair_substitute(const SymPoly& f, const LaurentRational& r) {
  if (f.nvars() % 2 != 0) throw Error(ErrorCode::InvalidArgument, "pair substitution needs an even variable count");
  int n = f.nvars() / 2;
  SymPoly out(n);
  for (const auto& [alpha, c] : f.terms()) {
    std::vector<int> target(2 * n, 0);
    for (int i = 0; i < alpha.length(); ++i) target[i] = alpha[i];
    std::sort(target.begin(), target.end());
    for (const auto& kappa : partitions_of(alpha.weight(), n)) {
      // split κ_i = a_{2i-1} + a_{2i}; the 2n values must rearrange α
      LaurentPoly coeff;
      std::vector<int> split(2 * n, 0);
      auto rec = [&](auto&& self, int i, int rpow) -> void {
        if (i == n) {
          std::vector<int> s = split;
          std::sort(s.begin(), s.end());
          if (s == target) coeff += LaurentPoly::monomial(1, rpow);
          return;
        }
        for (int b = 0; b <= kappa[i]; ++b) {
          split[2 * i] = kappa[i] - b;
          split[2 * i + 1] = b;
          self(self, i + 1, rpow + b);
        }
      };
      rec(rec, 0, 0);
      if (coeff.is_zero()) continue;
      // coeff is a polynomial in an auxiliary variable; evaluate it at r
      LaurentRational value;
      for (const auto& [e, k] : coeff.terms()) value += r.pow(e) * LaurentRational(k);
      out.add_term(kappa, c * value);
    }
  }
  return out;
}

// ------------------------------------------------------------ HL coefficients

namespace {

LaurentRational t_var() { return LaurentRational::var(); }

LaurentRational one_minus_t_pow(int e) { return LaurentRational(1) - LaurentRational::monomial(1, e); }

}  // namespace

LaurentRational b_lambda(const Partition& lambda) {
  LaurentRational r(1);
  for (const auto& [part, m] : lambda.multiplicities()) r *= pochhammer(t_var(), t_var(), m);
  return r;
}

LaurentRational v_lambda(const Partition& lambda, int n) {
  LaurentRational r(1);
  auto mult = lambda.multiplicities();
  mult[0] = n - lambda.length();
  for (const auto& [part, m] : mult) r *= pochhammer(t_var(), t_var(), m) / one_minus_t_pow(1).pow(m);
  return r;
}

LaurentRational psi_strip(const Partition& lambda, const Partition& mu) {
  if (!lambda.contains(mu)) return LaurentRational();
  Partition lc = conjugate(lambda), mc = conjugate(mu);
  int cols = lambda.largest() + 1;
  LaurentRational r(1);
  for (int j = 1; j <= cols; ++j) {
    int th = lc[j - 1] - mc[j - 1];
    if (th > 1) return LaurentRational();  // not a horizontal strip
    int th_next = lc[j] - mc[j];
    if (th == 0 && th_next == 1) r *= one_minus_t_pow(mu.multiplicity(j));
  }
  return r;
}

LaurentRational phi_strip(const Partition& lambda, const Partition& mu) {
  if (!lambda.contains(mu)) return LaurentRational();
  Partition lc = conjugate(lambda), mc = conjugate(mu);
  int cols = lambda.largest() + 1;
  LaurentRational r(1);
  for (int i = 1; i <= cols; ++i) {
    int th = lc[i - 1] - mc[i - 1];
    if (th > 1) return LaurentRational();
    int th_next = lc[i] - mc[i];
    if (th == 1 && th_next == 0) r *= one_minus_t_pow(lambda.multiplicity(i));
  }
  return r;
}

// ------------------------------------------------------------------ branching

namespace {

// Σ over strip chains λ = ν^0 ⊇ ν^1 ⊇ ... ⊇ ν^k = μ with |ν^{i-1}/ν^i| = sizes[i-1].
LaurentRational chain_sum(HLKind kind, const Partition& lambda, const Partition& mu, const std::vector<int>& sizes) {
  std::map<Partition, LaurentRational> layer{{lambda, LaurentRational(1)}};
  for (int s : sizes) {
    std::map<Partition, LaurentRational> next;
    for (const auto& [cur, c] : layer) {
      for (const auto& nu : remove_horizontal_strip(cur, s)) {
        if (!nu.contains(mu)) continue;
        LaurentRational w = kind == HLKind::P ? psi_strip(cur, nu) : phi_strip(cur, nu);
        if (w.is_zero()) continue;
        auto [it, fresh] = next.emplace(nu, c * w);
        if (!fresh) it->second += c * w;
      }
    }
    layer = std::move(next);
  }
  auto it = layer.find(mu);
  return it == layer.end() ? LaurentRational() : it->second;
}

}  // namespace

SymPoly skew_branching(HLKind kind, const Partition& lambda, const Partition& mu, int k) {
  SymPoly out(k);
  if (!lambda.contains(mu)) return out;
  int d = lambda.weight() - mu.weight();
  for (const auto& kappa : partitions_of(d, k)) {
    std::vector<int> sizes(k, 0);
    for (int i = 0; i < kappa.length(); ++i) sizes[i] = kappa[i];
    out.add_term(kappa, chain_sum(kind, lambda, mu, sizes));
  }
  return out;
}

// -------------------------------------------------------------- symmetrization

namespace {

/* Multivariate polynomials in at most 8 variables with exponents < 256, packed
   one byte per variable, x_1 in the top byte so that integer order is lex order. */
using Key = std::uint64_t;
using MPoly = std::map<Key, LaurentPoly>;

Key pack(const std::vector<int>& e) {
  Key k = 0;
  for (std::size_t i = 0; i < e.size(); ++i) k |= static_cast<Key>(e[i]) << (8 * (7 - i));
  return k;
}

std::vector<int> unpack(Key k, int n) {
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) e[i] = static_cast<int>((k >> (8 * (7 - i))) & 0xff);
  return e;
}

void mpoly_add(MPoly& p, Key k, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = p.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

// Σ_σ sgn(σ) x^{σ(e)} for strictly decreasing e.
MPoly alternant(const std::vector<int>& alpha, const LaurentPoly& c) {
  int n = static_cast<int>(alpha.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  MPoly out;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[perm[i]] = alpha[i];
    mpoly_add(out, pack(e), inversions % 2 ? -c : c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

SymPoly hl_p_symmetrized(const Partition& lambda, int n) {
  if (n > 8 || lambda.largest() + n > 200)
    throw Error(ErrorCode::BoundExceeded, "symmetrization limited to 8 variables");
  // F = x^λ Π_{i<j} (x_i - t x_j)
  std::vector<int> lam(n, 0);
  for (int i = 0; i < lambda.length(); ++i) lam[i] = lambda[i];
  MPoly f{{pack(lam), LaurentPoly(1)}};
  LaurentPoly minus_t = LaurentPoly::monomial(-1, 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Key ui = Key(1) << (8 * (7 - i)), uj = Key(1) << (8 * (7 - j));
      MPoly g;
      for (const auto& [k, c] : f) {
        mpoly_add(g, k + ui, c);
        mpoly_add(g, k + uj, c * minus_t);
      }
      f = std::move(g);
    }
  }
  // Antisymmetrize: each monomial with distinct exponents contributes sign * a_sorted.
  std::map<std::vector<int>, LaurentPoly> alt;
  for (const auto& [k, c] : f) {
    std::vector<int> e = unpack(k, n);
    std::vector<int> s = e;
    std::sort(s.rbegin(), s.rend());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) continue;
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (e[i] < e[j]) ++inversions;
    alt[s] += inversions % 2 ? -c : c;
  }
  MPoly a;
  for (const auto& [s, c] : alt)
    if (!c.is_zero())
      for (const auto& [k, v] : alternant(s, c)) mpoly_add(a, k, v);
  // Divide by the Vandermonde determinant a_δ, whose lex-leading term is x^δ.
  std::vector<int> delta(n);
  for (int i = 0; i < n; ++i) delta[i] = n - 1 - i;
  MPoly vdm = alternant(delta, LaurentPoly(1));
  Key dk = pack(delta);
  MPoly quotient;
  while (!a.empty()) {
    auto [lead, c] = *a.rbegin();
    std::vector<int> le = unpack(lead, n);
    for (int i = 0; i < n; ++i)
      if (le[i] < delta[i]) throw Error(ErrorCode::InternalInconsistency, "alternant not divisible by Vandermonde");
    Key qk = lead - dk;
    LaurentPoly cc = c;
    mpoly_add(quotient, qk, cc);
    for (const auto& [vk, vc] : vdm) mpoly_add(a, qk + vk, -(vc * cc));
  }
  auto top = quotient.find(pack(lam));
  if (top == quotient.end()) throw Error(ErrorCode::InternalInconsistency, "symmetrization lost the leading term");
  LaurentPoly norm = top->second;
  SymPoly out(n);
  for (const auto& kappa : partitions_of(lambda.weight(), n)) {
    std::vector<int> e(n, 0);
    for (int i = 0; i < kappa.length(); ++i) e[i] = kappa[i];
    auto it = quotient.find(pack(e));
    if (it != quotient.end()) out.add_term(kappa, LaurentRational(it->second, norm));
  }
  return out;
}

struct HLCache {
  std::mutex mu;
  std::map<std::tuple<Partition, int, int>, SymPoly> p;
  std::map<std::tuple<Partition, int, int>, std::map<Partition, SymPoly>> skew;
};

HLCache& cache() {
  static HLCache c;
  return c;
}

}  // namespace

SymPoly hl_p(const Partition& lambda, int n, HLMethod method) {
  if (lambda.length() > n)
    throw Error(ErrorCode::LengthExceedsVars, lambda.to_string() + " in " + std::to_string(n) + " variables");
  auto key = std::make_tuple(lambda, n, static_cast<int>(method));
  auto& c = cache();
  {
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.p.find(key);
    if (it != c.p.end()) return it->second;
  }
  SymPoly r = method == HLMethod::Branching ? skew_branching(HLKind::P, lambda, Partition(), n)
                                            : hl_p_symmetrized(lambda, n);
  std::lock_guard<std::mutex> lock(c.mu);
  c.p.emplace(key, r);
  return r;
}

SymPoly hl_q(const Partition& lambda, int n, HLMethod method) { return hl_p(lambda, n, method) * b_lambda(lambda); }

// -------------------------------------------------------------- basis change

SymPoly HLExpansion::reconstruct() const {
  SymPoly out(nvars);
  for (const auto& [lambda, c] : coeffs) out += hl_p(lambda, nvars).map_param(param) * c;
  return out;
}

HLExpansion expand_in_hl(const SymPoly& f, const ParamMap& param) {
  HLExpansion out;
  out.param = param;
  out.nvars = f.nvars();
  SymPoly rest = f;
  while (!rest.is_zero()) {
    auto it = rest.terms().rbegin();
    Partition top = it->first;
    LaurentRational c = it->second;
    out.coeffs.emplace(top, c);
    rest -= hl_p(top, f.nvars()).map_param(param) * c;
    if (!rest.coeff(top).is_zero()) throw Error(ErrorCode::InternalInconsistency, "triangular solve did not clear the top term");
  }
  return out;
}

// ---------------------------------------------------------------------- skew

SymPoly skew(HLKind kind, const Partition& lambda, const Partition& mu, int k, HLMethod inner) {
  if (!lambda.contains(mu)) return SymPoly(k);
  auto key = std::make_tuple(lambda, k, static_cast<int>(inner));
  auto& c = cache();
  std::map<Partition, SymPoly> table;
  bool have = false;
  {
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.skew.find(key);
    if (it != c.skew.end()) {
      table = it->second;
      have = true;
    }
  }
  if (!have) {
    int n = std::max(lambda.weight(), 1);
    SymPoly big = hl_p(lambda, n + k, inner);
    // Split each monomial x^α y^β of P_λ(x, y) into its x-part α and y-part β,
    // then expand the y-polynomial attached to each α in the P basis.
    std::map<Partition, SymPoly> by_alpha;
    for (int a = 0; a <= lambda.weight(); ++a) {
      for (const auto& alpha : partitions_of(a, k)) {
        SymPoly g(n);
        for (const auto& beta : partitions_of(lambda.weight() - a, n)) {
          std::vector<int> merged = alpha.parts();
          merged.insert(merged.end(), beta.parts().begin(), beta.parts().end());
          std::sort(merged.rbegin(), merged.rend());
          if (static_cast<int>(merged.size()) > n + k) continue;
          g.add_term(beta, big.coeff(Partition(merged)));
        }
        if (!g.is_zero()) by_alpha.emplace(alpha, std::move(g));
      }
    }
    for (const auto& [alpha, g] : by_alpha) {
      for (const auto& [nu, coef] : expand_in_hl(g).coeffs) {
        auto [it, fresh] = table.emplace(nu, SymPoly(k));
        it->second.add_term(alpha, coef);
      }
    }
    std::lock_guard<std::mutex> lock(c.mu);
    c.skew.emplace(key, table);
  }
  auto it = table.find(mu);
  SymPoly p = it == table.end() ? SymPoly(k) : it->second;
  if (kind == HLKind::Q) p *= b_lambda(lambda) / b_lambda(mu);
  return p;
}

// ------------------------------------------------------------ specializations

LaurentRational principal_skew(HLKind kind, const Partition& lambda, const Partition& mu, const LaurentRational& u,
                               const ParamMap& param) {
  if (!lambda.contains(mu)) return LaurentRational();
  LaurentRational t = param.t();
  Partition lc = conjugate(lambda), mc = conjugate(mu);
  LaurentRational r = u.pow(lambda.weight() - mu.weight()) * t.pow(nskew(lambda, mu));
  for (const auto& [i, m] : mu.multiplicities()) r *= pochhammer(t.pow(1 + lc[i - 1] - mc[i - 1]), t, m);
  const Partition& den = kind == HLKind::P ? lambda : mu;
  for (const auto& [i, m] : den.multiplicities()) r /= pochhammer(t, t, m);
  return r;
}

LaurentRational two_tail_spec(const Partition& nu, const LaurentRational& u1, const LaurentRational& u2,
                              const ParamMap& param) {
  LaurentRational total;
  for (const auto& mu : iterate({nu.weight(), nu.largest(), nu.length()})) {
    if (!nu.contains(mu)) continue;
    total += principal_skew(HLKind::P, nu, mu, u1, param) * principal_skew(HLKind::P, mu, Partition(), u2, param);
  }
  return total;
}

BigRational cauchy_kernel(const std::vector<BigRational>& x, const std::vector<BigRational>& y, const BigRational& t) {
  BigRational r = 1;
  for (const auto& a : x) {
    for (const auto& b : y) {
      BigRational p = a * b;
      if (abs(p) >= 1) throw Error(ErrorCode::DivergentProduct, "|x_i y_j| >= 1");
      r *= (1 - t * p) / (1 - p);
    }
  }
  return r;
}

BoundedValue cauchy_kernel_geometric(const BigRational& u1, const BigRational& u2, const BigRational& t,
                                     const BigRational& tol) {
  BigRational z = u1 * u2;
  if (abs(z) >= 1 || abs(t) >= 1) throw Error(ErrorCode::DivergentProduct, "geometric Cauchy kernel needs |u1 u2| < 1 and |t| < 1");
  if (tol <= 0) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  BigRational value = 1, x = z, at = abs(t);
  // |log 1/(1-x)| ≤ |x|/(1-|x|); the remaining tail sums to at most S = |x|/((1-|t|)(1-|x|)).
  auto tail = [&](const BigRational& ax) -> BigRational { return ax / ((1 - at) * (1 - ax)); };
  while (x != 0 && tail(abs(x)) >= tol / 10) {
    value /= 1 - x;
    x *= t;
  }
  BigRational s = tail(abs(x));
  // |e^S - 1| ≤ 3S for S ≤ 1
  return {value, abs(value) * 3 * s};
}

BigRational eval_skew_chain(HLKind kind, const Partition& lambda, const Partition& mu, const std::vector<BigRational>& x,
                            const BigRational& t) {
  if (!lambda.contains(mu)) return 0;
  std::map<std::pair<Partition, Partition>, BigRational> weight_cache;
  auto weight = [&](const Partition& a, const Partition& b) -> BigRational {
    auto key = std::make_pair(a, b);
    auto it = weight_cache.find(key);
    if (it != weight_cache.end()) return it->second;
    BigRational w = (kind == HLKind::P ? psi_strip(a, b) : phi_strip(a, b)).eval(t);
    weight_cache.emplace(key, w);
    return w;
  };
  // each remaining variable removes a horizontal strip, so ν/μ may have at most that many cells per column
  Partition mc = conjugate(mu);
  auto reachable = [&](const Partition& nu, int remaining) {
    Partition nc = conjugate(nu);
    for (int j = 0; j < nc.length(); ++j)
      if (nc[j] - mc[j] > remaining) return false;
    return true;
  };
  std::map<Partition, BigRational> layer{{lambda, 1}};
  for (std::size_t i = 0; i < x.size(); ++i) {
    const BigRational& xi = x[i];
    int remaining = static_cast<int>(x.size() - i - 1);
    std::map<Partition, BigRational> next;
    for (const auto& [cur, c] : layer) {
      for (int s = 0; s <= cur.weight() - mu.weight(); ++s) {
        BigRational xs = rational_pow(xi, s);
        for (const auto& nu : remove_horizontal_strip(cur, s)) {
          if (!nu.contains(mu) || !reachable(nu, remaining)) continue;
          BigRational w = weight(cur, nu);
          if (w == 0) continue;
          next[nu] += c * w * xs;
        }
      }
    }
    layer = std::move(next);
  }
  auto it = layer.find(mu);
  return it == layer.end() ? BigRational(0) : it->second;
}

}  // namespace hallmod
