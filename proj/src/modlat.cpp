#include "hallmod/modlat.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <tuple>

#include "hallmod/error.hpp"

namespace hallmod {

std::string to_string(Kind k) {
  switch (k) {
    case Kind::Classical: return "classical";
    case Kind::Alternating: return "alternating";
    case Kind::Hermitian: return "hermitian";
  }
  return "classical";
}

Kind parse_kind(const std::string& s) {
  if (s == "classical" || s == "nopairing") return Kind::Classical;
  if (s == "alternating" || s == "alt") return Kind::Alternating;
  if (s == "hermitian" || s == "her") return Kind::Hermitian;
  throw Error(ErrorCode::ParseError, "unknown kind '" + s + "'");
}

namespace {

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

long reduce(long v, long m) {
  v %= m;
  return v < 0 ? v + m : v;
}

void check_bound(const FiniteModule& M, long bound) {
  if (M.size() > bound)
    throw Error(ErrorCode::SizeBound, "module of size " + std::to_string(M.size()) + " exceeds bound " +
                                          std::to_string(bound));
}

// Scratch marks sized to the module, cleared by the caller through the touched list.
std::vector<char>& scratch(long n) {
  thread_local std::vector<char> marks;
  if (static_cast<long>(marks.size()) < n) marks.assign(n, 0);
  return marks;
}

// A + Z·g for a subgroup A (sorted); the result is sorted.
std::vector<Elem> add_cyclic(const FiniteModule& M, const std::vector<Elem>& A, Elem g) {
  auto& mark = scratch(M.size());
  std::vector<Elem> out = A;
  for (Elem a : A) mark[a] = 1;
  Elem step = g;
  // cosets A + kg are disjoint until kg falls back into A
  while (!mark[step]) {
    for (Elem a : A) {
      Elem z = M.add(a, step);
      mark[z] = 1;
      out.push_back(z);
    }
    step = M.add(step, g);
  }
  for (Elem z : out) mark[z] = 0;
  std::sort(out.begin(), out.end());
  return out;
}

// Sizes |X| = s_0 > s_1 > ... > s_m = 1 of a p-power ladder -> the type.
Partition type_from_ladder(const std::vector<long>& sizes, long r) {
  std::vector<int> conj;
  for (std::size_t j = 1; j < sizes.size(); ++j) {
    long ratio = sizes[j - 1] / sizes[j];
    if (ratio * sizes[j] != sizes[j - 1]) throw Error(ErrorCode::InternalInconsistency, "ladder sizes do not divide");
    int e = 0;
    while (ratio % r == 0) {
      ratio /= r;
      ++e;
    }
    if (ratio != 1) throw Error(ErrorCode::InternalInconsistency, "non-integral log in type ladder");
    conj.push_back(e);
  }
  try {
    return conjugate(Partition(conj));
  } catch (const Error&) {
    throw Error(ErrorCode::InternalInconsistency, "type ladder is not a conjugate partition");
  }
}

std::vector<Elem> times_p(const FiniteModule& M, const std::vector<Elem>& xs) {
  std::vector<Elem> out;
  out.reserve(xs.size());
  for (Elem x : xs) out.push_back(M.mul_p(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t intersection_size(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  std::size_t i = 0, j = 0, n = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

// Units of R/p^k as (a, b) pairs.
std::vector<std::pair<long, long>> units(const RingDescriptor& base, int k) {
  std::vector<std::pair<long, long>> out;
  long m = ipow(base.p, k);
  for (long a = 0; a < m; ++a) {
    for (long b = 0; b < (base.galois() ? m : 1); ++b) {
      long n = base.galois() ? reduce(a * a - base.c * b * b, base.p) : reduce(a, base.p);
      if (n != 0) out.emplace_back(a, b);
    }
  }
  return out;
}

/* Grows submodules from `start` by adjoining one candidate at a time. `candidates`
   lists the admissible new generators for a given S. Elements of R^×·g + S give
   the same extension as g and are skipped. */
template <class Candidates>
std::vector<Submodule> closure_bfs(const FiniteModule& M, const Submodule& start, Candidates candidates) {
  std::set<std::vector<Elem>> seen{start.elements};
  std::vector<Submodule> out{start};
  auto us = units(M.base(), std::max(1, M.type().largest()));
  std::vector<char> done(M.size());
  for (std::size_t head = 0; head < out.size(); ++head) {
    Submodule S = out[head];
    std::fill(done.begin(), done.end(), 0);
    for (Elem s : S.elements) done[s] = 1;
    for (Elem g : candidates(S)) {
      if (done[g]) continue;
      Submodule T = adjoin(M, S, g);
      std::vector<Elem> multiples;
      for (auto [a, b] : us) multiples.push_back(M.scale(g, a, b));
      for (Elem u : multiples) {
        if (done[u]) continue;
        for (Elem s : S.elements) done[M.add(u, s)] = 1;
      }
      if (seen.insert(T.elements).second) out.push_back(std::move(T));
    }
  }
  return out;
}

}  // namespace

// --------------------------------------------------------------- FiniteModule

FiniteModule::FiniteModule(const RingDescriptor& base, const Partition& type) : base_(base), type_(type) {
  base_.k = type.largest();
  for (int i = 0; i < type.length(); ++i) {
    long m = ipow(base.p, type[i]);
    for (int c = 0; c < (base.galois() ? 2 : 1); ++c) {
      moduli_.push_back(m);
      place_.push_back(size_);
      if (size_ > (1L << 30) / m) throw Error(ErrorCode::SizeBound, "module too large to index");
      size_ *= m;
    }
  }
}

std::vector<long> FiniteModule::decode(Elem x) const {
  std::vector<long> out(moduli_.size());
  for (std::size_t j = 0; j < moduli_.size(); ++j) out[j] = (x / place_[j]) % moduli_[j];
  return out;
}

Elem FiniteModule::encode(const std::vector<long>& comps) const {
  long r = 0;
  for (std::size_t j = 0; j < moduli_.size(); ++j) r += reduce(comps[j], moduli_[j]) * place_[j];
  return static_cast<Elem>(r);
}

Elem FiniteModule::add(Elem x, Elem y) const {
  long r = 0;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    long m = moduli_[j];
    r += ((x / place_[j]) % m + (y / place_[j]) % m) % m * place_[j];
  }
  return static_cast<Elem>(r);
}

Elem FiniteModule::neg(Elem x) const {
  long r = 0;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    long m = moduli_[j];
    r += (m - (x / place_[j]) % m) % m * place_[j];
  }
  return static_cast<Elem>(r);
}

Elem FiniteModule::scale(Elem x, long a, long b) const {
  if (!base_.galois()) {
    if (b != 0) throw Error(ErrorCode::InvalidArgument, "ξ is not in a cyclic base ring");
    long r = 0;
    for (std::size_t j = 0; j < moduli_.size(); ++j) {
      long m = moduli_[j];
      r += reduce(a, m) * ((x / place_[j]) % m) % m * place_[j];
    }
    return static_cast<Elem>(r);
  }
  long r = 0;
  for (std::size_t j = 0; j < moduli_.size(); j += 2) {
    long m = moduli_[j];
    long xa = (x / place_[j]) % m, xb = (x / place_[j + 1]) % m;
    long am = reduce(a, m), bm = reduce(b, m);
    long ya = (am * xa + reduce(base_.c * bm, m) * xb) % m;
    long yb = (am * xb + bm * xa) % m;
    r += ya * place_[j] + yb * place_[j + 1];
  }
  return static_cast<Elem>(r);
}

Elem FiniteModule::mul_p(Elem x) const { return scale(x, base_.p); }

Elem FiniteModule::basis(int i) const { return static_cast<Elem>(place_[base_.galois() ? 2 * i : i]); }

GaloisElem FiniteModule::coord(Elem x, int i) const {
  RingDescriptor r{base_.p, type_[i], base_.c};
  int j = base_.galois() ? 2 * i : i;
  long a = (x / place_[j]) % moduli_[j];
  long b = base_.galois() ? (x / place_[j + 1]) % moduli_[j + 1] : 0;
  return GaloisElem::make(r, a, b);
}

// ------------------------------------------------------------------ Submodule

bool Submodule::contains(Elem x) const { return std::binary_search(elements.begin(), elements.end(), x); }

bool Submodule::subset_of(const Submodule& o) const {
  return std::includes(o.elements.begin(), o.elements.end(), elements.begin(), elements.end());
}

Submodule zero_submodule(const FiniteModule&) { return {{0}, {}}; }

Submodule whole_module(const FiniteModule& M) {
  Submodule s;
  s.elements.resize(M.size());
  for (long x = 0; x < M.size(); ++x) s.elements[x] = static_cast<Elem>(x);
  for (int i = 0; i < M.ncoords(); ++i) s.gens.push_back(M.basis(i));
  return s;
}

Submodule adjoin(const FiniteModule& M, const Submodule& S, Elem g) {
  if (S.contains(g)) return S;
  Submodule T;
  T.elements = add_cyclic(M, S.elements, g);
  if (M.base().galois()) T.elements = add_cyclic(M, T.elements, M.mul_xi(g));
  T.gens = S.gens;
  T.gens.push_back(g);
  return T;
}

Submodule span(const FiniteModule& M, const std::vector<Elem>& gens) {
  Submodule s = zero_submodule(M);
  for (Elem g : gens) s = adjoin(M, s, g);
  return s;
}

Submodule intersect(const Submodule& a, const Submodule& b) {
  Submodule r;
  std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                        std::back_inserter(r.elements));
  return r;
}

namespace {

// Gives an element list a generating set, adjoining greedily.
Submodule with_gens(const FiniteModule& M, std::vector<Elem> elements) {
  Submodule s = zero_submodule(M);
  for (Elem x : elements) {
    if (s.size() == static_cast<long>(elements.size())) break;
    if (!s.contains(x)) s = adjoin(M, s, x);
  }
  if (s.elements != elements) throw Error(ErrorCode::NotASubmodule, "element list is not closed");
  return s;
}

}  // namespace

std::vector<Submodule> enumerate_submodules_containing(const FiniteModule& M, const Submodule& base,
                                                       long size_bound) {
  check_bound(M, size_bound);
  std::vector<Elem> all(M.size());
  for (long x = 0; x < M.size(); ++x) all[x] = static_cast<Elem>(x);
  auto subs = closure_bfs(M, base, [&](const Submodule&) -> const std::vector<Elem>& { return all; });
  std::sort(subs.begin(), subs.end(), [](const Submodule& a, const Submodule& b) {
    return std::make_pair(a.size(), a.elements) < std::make_pair(b.size(), b.elements);
  });
  return subs;
}

std::vector<Submodule> enumerate_submodules(const FiniteModule& M, long size_bound) {
  return enumerate_submodules_containing(M, zero_submodule(M), size_bound);
}

// ---------------------------------------------------------------------- types

Partition module_type(const FiniteModule& M, const Submodule& H) {
  std::vector<long> sizes{H.size()};
  std::vector<Elem> cur = H.elements;
  while (cur.size() > 1) {
    cur = times_p(M, cur);
    sizes.push_back(static_cast<long>(cur.size()));
  }
  return type_from_ladder(sizes, M.base().residue_size());
}

Partition module_type(const FiniteModule& M) { return module_type(M, whole_module(M)); }

Partition quotient_type(const FiniteModule& M, const Submodule& A, const Submodule& B) {
  if (!B.subset_of(A)) throw Error(ErrorCode::NotASubmodule, "quotient by a non-submodule");
  // |p^j(A/B)| = |p^j A| / |p^j A ∩ B|
  std::vector<long> sizes;
  std::vector<Elem> cur = A.elements;
  while (true) {
    long s = static_cast<long>(cur.size() / intersection_size(cur, B.elements));
    sizes.push_back(s);
    if (s == 1) break;
    cur = times_p(M, cur);
  }
  return type_from_ladder(sizes, M.base().residue_size());
}

Partition quotient_type(const FiniteModule& M, const Submodule& H) {
  return quotient_type(M, whole_module(M), H);
}

// ------------------------------------------------------------------- pairings

PairedModule::PairedModule(Kind kind, const Partition& lambda, int p)
    : kind_(kind),
      lambda_(lambda),
      module_(kind == Kind::Hermitian ? make_galois_ring(p, 1) : make_cyclic_ring(p, 1),
              kind == Kind::Hermitian ? lambda : double_interleave(lambda)) {
  if (kind == Kind::Classical) throw Error(ErrorCode::InvalidArgument, "a paired module needs a pairing kind");
  value_ring_ = module_.base().with_precision(lambda.largest());
}

GaloisElem PairedModule::pairing(Elem x, Elem y) const {
  int top = lambda_.largest();
  long m = value_ring_.modulus();
  GaloisElem v = GaloisElem::make(value_ring_, 0, 0);
  if (kind_ == Kind::Alternating) {
    auto dx = module_.decode(x), dy = module_.decode(y);
    long a = 0;
    for (int i = 0; i < lambda_.length(); ++i) {
      long w = ipow(value_ring_.p, top - lambda_[i]);
      a += w * ((dx[2 * i] * dy[2 * i + 1] - dx[2 * i + 1] * dy[2 * i]) % m) % m;
    }
    return GaloisElem::make(value_ring_, a, 0);
  }
  for (int i = 0; i < lambda_.length(); ++i) {
    GaloisElem xi = module_.coord(x, i), yi = module_.coord(y, i);
    long w = ipow(value_ring_.p, top - lambda_[i]);
    // lift both coordinates to precision λ1 and scale by p^{λ1-λ_i}
    GaloisElem lx = GaloisElem::make(value_ring_, xi.a, xi.b), ly = GaloisElem::make(value_ring_, yi.a, yi.b);
    v = v + GaloisElem::make(value_ring_, w, 0) * conjugate(lx) * ly;
  }
  return v;
}

bool PairedModule::orthogonal(Elem x, Elem y) const { return pairing(x, y).is_zero(); }

GaloisElem pairing_eval(const PairedModule& P, Elem x, Elem y) { return P.pairing(x, y); }

Submodule perp(const PairedModule& P, const Submodule& H) {
  const FiniteModule& M = P.module();
  std::vector<Elem> gens = H.gens;
  if (gens.empty() && H.size() > 1) gens = H.elements;
  std::vector<Elem> out;
  for (long x = 0; x < M.size(); ++x) {
    bool ok = true;
    for (Elem h : gens) {
      if (!P.orthogonal(static_cast<Elem>(x), h)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(static_cast<Elem>(x));
  }
  return with_gens(M, std::move(out));
}

bool is_isotropic(const PairedModule& P, const Submodule& H) { return H.subset_of(perp(P, H)); }

std::vector<Submodule> enumerate_isotropic(const PairedModule& P, long size_bound) {
  const FiniteModule& M = P.module();
  check_bound(M, size_bound);
  return closure_bfs(M, zero_submodule(M), [&](const Submodule& S) {
    std::vector<Elem> cands;
    for (Elem g : perp(P, S).elements)
      if (P.orthogonal(g, g)) cands.push_back(g);
    return cands;
  });
}

Partition paired_quotient_type(const PairedModule& P, const Submodule& Mprime, const Submodule& Mperp) {
  Partition t = quotient_type(P.module(), Mprime, Mperp);
  if (P.kind() == Kind::Hermitian) return t;
  try {
    return halve_doubled(t);
  } catch (const Error&) {
    throw Error(ErrorCode::InternalInconsistency, "alternating quotient of type " + t.to_string() + " is not doubled");
  }
}

// ------------------------------------------------------------------- counting

namespace {

using Table = std::map<std::pair<Partition, Partition>, long>;

std::mutex table_mu;
std::map<std::tuple<int, Partition, int, int>, Table> table_cache;

const Table* cached(const std::tuple<int, Partition, int, int>& key) {
  std::lock_guard<std::mutex> lock(table_mu);
  auto it = table_cache.find(key);
  return it == table_cache.end() ? nullptr : &it->second;
}

const Table& store(const std::tuple<int, Partition, int, int>& key, Table t) {
  std::lock_guard<std::mutex> lock(table_mu);
  return table_cache.emplace(key, std::move(t)).first->second;
}

}  // namespace

const Table& classical_table(const Partition& lambda, const RingDescriptor& base, long size_bound) {
  auto key = std::make_tuple(static_cast<int>(Kind::Classical), lambda, base.p, base.c);
  if (const Table* t = cached(key)) return *t;
  FiniteModule M(base, lambda);
  Table t;
  for (const auto& H : enumerate_submodules(M, size_bound)) ++t[{quotient_type(M, H), module_type(M, H)}];
  return store(key, std::move(t));
}

const Table& paired_table(Kind kind, const Partition& lambda, int p, long size_bound) {
  auto key = std::make_tuple(static_cast<int>(kind), lambda, p, 0);
  if (const Table* t = cached(key)) return *t;
  PairedModule P(kind, lambda, p);
  const FiniteModule& M = P.module();
  Table t;
  // M' ⊇ M'^⊥ exactly when N = M'^⊥ is isotropic and M' = N^⊥
  for (const auto& N : enumerate_isotropic(P, size_bound)) {
    Submodule Mprime = perp(P, N);
    Submodule back = perp(P, Mprime);
    if (!(back == N) || !N.subset_of(Mprime))
      throw Error(ErrorCode::InternalInconsistency, "perp is not an involution on isotropic submodules");
    ++t[{quotient_type(M, Mprime), paired_quotient_type(P, Mprime, back)}];
  }
  return store(key, std::move(t));
}

long count_G_classical(const Partition& lambda, const Partition& mu, const Partition& nu, const RingDescriptor& base,
                       long size_bound) {
  if (lambda.weight() != mu.weight() + nu.weight()) return 0;
  const Table& t = classical_table(lambda, base, size_bound);
  auto it = t.find({mu, nu});
  return it == t.end() ? 0 : it->second;
}

long count_G_paired(Kind kind, const Partition& lambda, const Partition& mu, const Partition& nu, int p,
                    long size_bound) {
  int need = kind == Kind::Hermitian ? 2 * mu.weight() + nu.weight() : mu.weight() + nu.weight();
  if (lambda.weight() != need) return 0;
  const Table& t = paired_table(kind, lambda, p, size_bound);
  auto it = t.find({mu, nu});
  return it == t.end() ? 0 : it->second;
}

long count_norm_sphere(const Partition& lambda, int p, long size_bound) {
  PairedModule P(Kind::Hermitian, lambda, p);
  check_bound(P.module(), size_bound);
  long n = 0;
  for (long x = 0; x < P.module().size(); ++x) {
    GaloisElem v = P.pairing(static_cast<Elem>(x), static_cast<Elem>(x));
    if (v.a == 1 && v.b == 0) ++n;
  }
  return n;
}

namespace {

// Elements killed by p^e.
std::vector<Elem> killed_by(const FiniteModule& M, int e) {
  std::vector<Elem> out;
  for (long x = 0; x < M.size(); ++x) {
    Elem y = static_cast<Elem>(x);
    for (int i = 0; i < e && y != 0; ++i) y = M.mul_p(y);
    if (y == 0) out.push_back(static_cast<Elem>(x));
  }
  return out;
}

}  // namespace

long count_paired_automorphisms(Kind kind, const Partition& lambda, int p, long size_bound) {
  if (kind == Kind::Classical) {
    HomCounts h = count_homs(lambda, lambda, p, size_bound);
    return h.sur;
  }
  PairedModule P(kind, lambda, p);
  const FiniteModule& M = P.module();
  check_bound(M, size_bound);
  const Partition& type = M.type();
  int ngen = type.length();
  std::vector<Elem> e(ngen);
  for (int i = 0; i < ngen; ++i) e[i] = M.basis(i);
  std::vector<std::vector<Elem>> cands(ngen);
  for (int i = 0; i < ngen; ++i) cands[i] = killed_by(M, type[i]);

  std::vector<Elem> img(ngen);
  long count = 0;
  auto dfs = [&](auto&& self, int i) -> void {
    if (i == ngen) {
      if (span(M, img).size() == M.size()) ++count;
      return;
    }
    for (Elem y : cands[i]) {
      bool ok = true;
      for (int j = 0; j <= i && ok; ++j) {
        Elem yj = j == i ? y : img[j];
        ok = P.pairing(y, yj) == P.pairing(e[i], e[j]);
      }
      if (!ok) continue;
      img[i] = y;
      self(self, i + 1);
    }
  };
  dfs(dfs, 0);
  return count;
}

HomCounts count_homs(const Partition& lambda, const Partition& mu, int p, long size_bound) {
  RingDescriptor base = make_cyclic_ring(p, 1);
  FiniteModule src(base, lambda), dst(base, mu);
  check_bound(src, size_bound);
  check_bound(dst, size_bound);
  std::vector<std::vector<Elem>> cands(lambda.length());
  for (int i = 0; i < lambda.length(); ++i) cands[i] = killed_by(dst, lambda[i]);
  HomCounts h;
  std::vector<Elem> img(lambda.length());
  auto dfs = [&](auto&& self, int i) -> void {
    if (i == lambda.length()) {
      long s = span(dst, img).size();
      ++h.hom;
      if (s == dst.size()) ++h.sur;
      if (s == src.size()) ++h.inj;
      return;
    }
    for (Elem y : cands[i]) {
      img[i] = y;
      self(self, i + 1);
    }
  };
  dfs(dfs, 0);
  return h;
}

}  // namespace hallmod
