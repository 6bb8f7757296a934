#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hallmod/error.hpp"
#include "hallmod/exactalg.hpp"
#include "hallmod/modlat.hpp"

using namespace hallmod;

namespace {

RingDescriptor Zp(int p) { return make_cyclic_ring(p, 1); }

long enum_count(const Partition& l, int p) { return static_cast<long>(enumerate_submodules(FiniteModule(Zp(p), l)).size()); }

// Number of subgroups of type ν in an abelian p-group of type λ (Birkhoff):
// Π_i p^{ν'_{i+1}(λ'_i − ν'_i)} [λ'_i − ν'_{i+1}, ν'_i − ν'_{i+1}]_p
long birkhoff(const Partition& lambda, const Partition& nu, int p) {
  Partition lc = conjugate(lambda), nc = conjugate(nu);
  if (!lambda.contains(nu)) return 0;
  BigRational r = 1;
  for (int i = 0; i < lc.length(); ++i) {
    int a = lc[i], b = nc[i], c = nc[i + 1];
    r *= rational_pow(BigRational(p), c * (a - b));
    r *= qbinomial(a - c, b - c).eval(BigRational(p));
  }
  return r.get_num().get_si();
}

}  // namespace

TEST_CASE("enumerate_submodules examples") {
  CHECK(enum_count(Partition{1}, 2) == 2);
  CHECK(enum_count(Partition{1, 1}, 2) == 5);
  CHECK(enum_count(Partition{2}, 3) == 3);
  CHECK(enum_count(Partition(), 3) == 1);
  CHECK(enum_count(Partition{1, 1, 1}, 2) == 16);
}

TEST_CASE("enumeration is complete against subgroup-count formula") {
  for (int p : {2, 3}) {
    for (const auto& l : iterate({4, -1, -1})) {
      FiniteModule M(Zp(p), l);
      std::map<Partition, long> by_type;
      auto subs = enumerate_submodules(M);
      for (const auto& H : subs) ++by_type[module_type(M, H)];
      long total = 0;
      for (const auto& nu : iterate({l.weight(), -1, -1})) {
        long expect = birkhoff(l, nu, p);
        total += expect;
        CHECK_MESSAGE(by_type[nu] == expect, "λ=" << l.to_string() << " ν=" << nu.to_string() << " p=" << p);
      }
      CHECK(static_cast<long>(subs.size()) == total);
    }
  }
}

TEST_CASE("size bound") {
  FiniteModule M(Zp(3), Partition{1, 1, 1, 1, 1, 1, 1, 1});
  try {
    enumerate_submodules(M);
    FAIL("expected SizeBound");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeBound);
  }
}

TEST_CASE("module_type and quotient_type") {
  FiniteModule M(Zp(3), Partition{2});
  Submodule pM = span(M, {M.mul_p(M.basis(0))});
  CHECK(module_type(M, zero_submodule(M)) == Partition());
  CHECK(module_type(M, pM) == Partition{1});
  CHECK(quotient_type(M, pM) == Partition{1});
  CHECK(quotient_type(M, whole_module(M)) == Partition());
  CHECK(quotient_type(M, zero_submodule(M)) == Partition{2});
  CHECK(module_type(M) == Partition{2});

  FiniteModule V(Zp(2), Partition{1, 1});
  Submodule diag = span(V, {V.add(V.basis(0), V.basis(1))});
  CHECK(module_type(V, diag) == Partition{1});

  for (const auto& l : iterate({5, -1, -1})) CHECK(module_type(FiniteModule(Zp(2), l)) == l);
  CHECK(module_type(FiniteModule(make_galois_ring(3, 1), Partition{2, 1})) == Partition{2, 1});

  Submodule line = span(V, {V.basis(0)}), other = span(V, {V.basis(1)});
  try {
    quotient_type(V, line, other);
    FAIL("expected NotASubmodule");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotASubmodule);
  }
}

TEST_CASE("pairing examples") {
  PairedModule A(Kind::Alternating, Partition{1}, 2);
  const auto& M = A.module();
  CHECK(M.size() == 4);
  CHECK(pairing_eval(A, M.basis(0), M.basis(1)).a == 1);
  for (Elem x = 0; x < M.size(); ++x) CHECK(pairing_eval(A, x, x).is_zero());

  PairedModule H(Kind::Hermitian, Partition{1}, 3);
  auto v = pairing_eval(H, H.module().basis(0), H.module().basis(0));
  CHECK(v.a == 1);
  CHECK(v.b == 0);
}

TEST_CASE("pairing symmetries and regularity") {
  for (auto [kind, l, p] : {std::tuple{Kind::Alternating, Partition{2, 1}, 2}, std::tuple{Kind::Alternating, Partition{1, 1}, 3},
                            std::tuple{Kind::Hermitian, Partition{2}, 3}, std::tuple{Kind::Hermitian, Partition{1, 1}, 3}}) {
    PairedModule P(kind, l, p);
    const auto& M = P.module();
    for (Elem x = 0; x < M.size(); ++x) {
      bool kernel = x != 0;
      for (Elem y = 0; y < M.size(); ++y) {
        auto xy = P.pairing(x, y), yx = P.pairing(y, x);
        if (kind == Kind::Alternating)
          CHECK(xy == -yx);
        else
          CHECK(xy == conjugate(yx));
        if (!xy.is_zero()) kernel = false;
      }
      CHECK_FALSE(kernel);
    }
  }
}

TEST_CASE("perp examples") {
  PairedModule A(Kind::Alternating, Partition{1}, 2);
  const auto& M = A.module();
  CHECK(perp(A, zero_submodule(M)) == whole_module(M));
  CHECK(perp(A, whole_module(M)) == zero_submodule(M));
  Submodule e1 = span(M, {M.basis(0)});
  CHECK(perp(A, e1) == e1);
}

TEST_CASE("perp invariants") {
  for (auto [kind, l, p] : {std::tuple{Kind::Alternating, Partition{1}, 2}, std::tuple{Kind::Alternating, Partition{2}, 2},
                            std::tuple{Kind::Alternating, Partition{1, 1}, 2}, std::tuple{Kind::Hermitian, Partition{1}, 3},
                            std::tuple{Kind::Hermitian, Partition{2}, 3}, std::tuple{Kind::Hermitian, Partition{1, 1}, 3}}) {
    PairedModule P(kind, l, p);
    const auto& M = P.module();
    auto subs = enumerate_submodules(M);
    std::vector<Submodule> perps;
    for (const auto& H : subs) {
      Submodule Hp = perp(P, H);
      CHECK(H.size() * Hp.size() == M.size());
      CHECK(perp(P, Hp) == H);
      perps.push_back(Hp);
      if (kind == Kind::Alternating && Hp.subset_of(H)) CHECK_NOTHROW(halve_doubled(quotient_type(M, H, Hp)));
    }
    if (kind == Kind::Alternating) {
      for (std::size_t i = 0; i < subs.size(); ++i)
        for (std::size_t j = 0; j < subs.size(); ++j)
          CHECK(subs[i].subset_of(subs[j]) == perps[j].subset_of(perps[i]));
    }
  }
}

TEST_CASE("count_G_classical") {
  for (const auto& l : {Partition{1}, Partition{2, 1}, Partition{1, 1}})
    CHECK(count_G_classical(l, Partition(), l, Zp(3)) == 1);
  CHECK(count_G_classical(Partition{1, 1}, Partition{1}, Partition{1}, Zp(3)) == 4);
  CHECK(count_G_classical(Partition{2}, Partition{1}, Partition{1}, Zp(3)) == 1);
  CHECK(count_G_classical(Partition{2}, Partition{1}, Partition{2}, Zp(3)) == 0);
  for (int p : {2, 3}) {
    for (const auto& l : iterate({4, -1, -1}))
      for (const auto& mu : iterate({l.weight(), -1, -1}))
        for (const auto& nu : partitions_of(l.weight() - mu.weight()))
          CHECK(count_G_classical(l, mu, nu, Zp(p)) == count_G_classical(l, nu, mu, Zp(p)));
  }
}

TEST_CASE("count_G_paired examples") {
  for (const auto& l : {Partition{1}, Partition{2}, Partition{1, 1}}) {
    CHECK(count_G_paired(Kind::Alternating, l, Partition(), l, 3) == 1);
    CHECK(count_G_paired(Kind::Hermitian, l, Partition(), l, 3) == 1);
  }
  CHECK(count_G_paired(Kind::Alternating, Partition{1}, Partition{1}, Partition(), 3) == 4);
  CHECK(count_G_paired(Kind::Hermitian, Partition{1, 1}, Partition{1}, Partition(), 3) == 4);
  CHECK(count_G_paired(Kind::Hermitian, Partition{1, 1}, Partition{1}, Partition(), 5) == 6);
  CHECK(count_G_paired(Kind::Alternating, Partition{1}, Partition{1}, Partition(), 5) == 6);
  CHECK(count_G_paired(Kind::Hermitian, Partition{1}, Partition{1}, Partition(), 3) == 0);
  try {
    count_G_paired(Kind::Hermitian, Partition{1}, Partition(), Partition{1}, 2);
    FAIL("expected EvenPrimeUnsupported");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EvenPrimeUnsupported);
  }
}

TEST_CASE("isotropic route agrees with the literal definition") {
  for (auto [kind, l, p] : {std::tuple{Kind::Alternating, Partition{1, 1}, 2}, std::tuple{Kind::Alternating, Partition{2, 1}, 2},
                            std::tuple{Kind::Alternating, Partition{1}, 3}, std::tuple{Kind::Hermitian, Partition{1, 1}, 3},
                            std::tuple{Kind::Hermitian, Partition{2}, 3}}) {
    PairedModule P(kind, l, p);
    const auto& M = P.module();
    std::map<std::pair<Partition, Partition>, long> literal;
    for (const auto& Mp : enumerate_submodules(M)) {
      Submodule Mperp = perp(P, Mp);
      if (!Mperp.subset_of(Mp)) continue;
      ++literal[{quotient_type(M, Mp), paired_quotient_type(P, Mp, Mperp)}];
    }
    CHECK(literal == paired_table(kind, l, p));
  }
}

TEST_CASE("multi-step chains") {
  // chains M ⊃ M1 ⊃ M2 with M/M1 of type μ1, M1/M2 of type μ2, M2 ⊇ M2^⊥ and M2/M2^⊥ of type ν
  auto direct = [](Kind kind, const Partition& l, int p, const Partition& m1, const Partition& m2, const Partition& nu) {
    PairedModule P(kind, l, p);
    const auto& M = P.module();
    long n = 0;
    for (const auto& N : enumerate_isotropic(P, 10000)) {
      Submodule M2 = perp(P, N);
      if (paired_quotient_type(P, M2, N) != nu) continue;
      for (const auto& M1 : enumerate_submodules_containing(M, M2, 10000))
        if (quotient_type(M, M1) == m1 && quotient_type(M, M1, M2) == m2) ++n;
    }
    return n;
  };
  auto via_sum = [](Kind kind, const Partition& l, int p, const Partition& m1, const Partition& m2, const Partition& nu) {
    RingDescriptor base = kind == Kind::Hermitian ? make_galois_ring(p, 1) : Zp(p);
    long n = 0;
    for (const auto& mu : partitions_of(m1.weight() + m2.weight()))
      n += count_G_classical(mu, m1, m2, base) * count_G_paired(kind, l, mu, nu, p, 10000);
    return n;
  };
  Partition one{1};
  long a = direct(Kind::Alternating, Partition{2, 1}, 2, one, one, Partition{1});
  CHECK(a > 0);
  CHECK(a == via_sum(Kind::Alternating, Partition{2, 1}, 2, one, one, Partition{1}));
  long h = direct(Kind::Hermitian, Partition{2, 2}, 3, one, one, Partition());
  CHECK(h > 0);
  CHECK(h == via_sum(Kind::Hermitian, Partition{2, 2}, 3, one, one, Partition()));
}

TEST_CASE("count_norm_sphere") {
  CHECK(count_norm_sphere(Partition{1}, 3) == 4);
  CHECK(count_norm_sphere(Partition{1, 1}, 3) == 24);
  CHECK(count_norm_sphere(Partition{2}, 3) == 12);
}

TEST_CASE("automorphism counts") {
  CHECK(count_paired_automorphisms(Kind::Hermitian, Partition{1}, 3) == 4);
  CHECK(count_paired_automorphisms(Kind::Alternating, Partition{1}, 2) == 6);
  CHECK(count_paired_automorphisms(Kind::Classical, Partition{1}, 3) == 2);
  CHECK(count_paired_automorphisms(Kind::Classical, Partition{1, 1}, 2) == 6);   // GL_2(F_2)
  CHECK(count_paired_automorphisms(Kind::Alternating, Partition{1}, 3) == 24);   // SL_2(F_3)
}

TEST_CASE("hom counts") {
  for (int p : {2, 3}) {
    for (const auto& l : iterate({3, -1, -1})) {
      for (const auto& m : iterate({3, -1, -1})) {
        HomCounts h = count_homs(l, m, p);
        CHECK(h.hom == static_cast<long>(rational_pow(BigRational(p), conj_dot(l, m)).get_num().get_si()));
        // G_λ embeds in G_μ iff λ ⊆ μ, and surjects onto it iff μ ⊆ λ
        CHECK((h.inj > 0) == m.contains(l));
        CHECK((h.sur > 0) == l.contains(m));
        if (l == m) CHECK(h.sur == h.inj);
      }
    }
  }
}

TEST_CASE("kind names") {
  CHECK(parse_kind("nopairing") == Kind::Classical);
  CHECK(to_string(Kind::Hermitian) == "hermitian");
  CHECK_THROWS_AS(parse_kind("symmetric"), Error);
}
