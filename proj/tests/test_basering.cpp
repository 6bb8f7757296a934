#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "hallmod/basering.hpp"
#include "hallmod/error.hpp"

using namespace hallmod;

TEST_CASE("make_galois_ring") {
  auto r = make_galois_ring(3, 1);
  CHECK(r.c == 2);
  CHECK(r.size() == 9);
  CHECK(r.residue_size() == 9);
  CHECK(r.to_string() == "GR(3,1;2)");

  auto r5 = make_galois_ring(5, 2);
  CHECK(r5.c == 2);
  CHECK(r5.size() == 625);

  CHECK(make_galois_ring(7, 1).c == 3);
  try {
    make_galois_ring(2, 1);
    FAIL("expected EvenPrimeUnsupported");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EvenPrimeUnsupported);
  }
}

TEST_CASE("norm") {
  auto r = make_galois_ring(3, 1);
  CHECK(norm(GaloisElem::make(r, 0, 0)).value == 0);
  CHECK(norm(GaloisElem::make(r, 1, 1)).value == 2);
}

TEST_CASE("valuation") {
  auto z9 = make_cyclic_ring(3, 2);
  CHECK(valuation(CyclicElem::make(z9, 0)) == 2);
  CHECK(valuation(CyclicElem::make(z9, 3)) == 1);
  CHECK(valuation(CyclicElem::make(z9, 4)) == 0);
  CHECK(valuation(GaloisElem::xi(make_galois_ring(3, 1))) == 0);
  CHECK(valuation(GaloisElem::make(make_galois_ring(3, 2), 3, 6)) == 1);
}

TEST_CASE("printing") {
  auto r = make_galois_ring(3, 1);
  CHECK(GaloisElem::make(r, 2, 0).to_string() == "2");
  CHECK(GaloisElem::make(r, 1, 2).to_string() == "1+2*x");
  CHECK(make_cyclic_ring(3, 2).to_string() == "Z/9");
}

TEST_CASE("conjugation is an involutive ring automorphism") {
  for (auto [p, k] : {std::pair{3, 1}, std::pair{5, 1}}) {
    auto r = make_galois_ring(p, k);
    auto all = galois_elements(r);
    for (const auto& x : all) {
      CHECK(conjugate(conjugate(x)) == x);
      for (const auto& y : all) {
        CHECK(conjugate(x + y) == conjugate(x) + conjugate(y));
        CHECK(conjugate(x * y) == conjugate(x) * conjugate(y));
      }
    }
    // the fixed subring is Z/p^k
    for (const auto& x : all) CHECK((conjugate(x) == x) == (x.b == 0));
  }
}

TEST_CASE("ring axioms in GR(3,2)") {
  auto r = make_galois_ring(3, 2);
  auto all = galois_elements(r);
  REQUIRE(all.size() == 81);
  auto one = GaloisElem::make(r, 1, 0);
  CHECK(GaloisElem::xi(r) * GaloisElem::xi(r) == GaloisElem::make(r, r.c, 0));
  for (std::size_t i = 0; i < all.size(); i += 5) {
    const auto& x = all[i];
    CHECK(x * one == x);
    for (std::size_t j = 0; j < all.size(); j += 3) {
      const auto& y = all[j];
      CHECK(x * y == y * x);
      for (std::size_t l = 0; l < all.size(); l += 11) {
        const auto& z = all[l];
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
      }
    }
  }
}

TEST_CASE("norm fibres over units") {
  for (int p : {3, 5}) {
    auto r = make_galois_ring(p, 1);
    std::map<long, int> fibre;
    for (const auto& x : galois_elements(r)) {
      CHECK(x.is_unit() == !x.is_zero());
      if (x.is_unit()) {
        auto n = norm(x);
        CHECK(n.is_unit());
        ++fibre[n.value];
      }
    }
    CHECK(fibre.size() == static_cast<std::size_t>(p - 1));
    for (auto [v, count] : fibre) CHECK(count == p + 1);
  }
}

TEST_CASE("norm is multiplicative and unit test agrees") {
  auto r = make_galois_ring(3, 2);
  for (const auto& x : galois_elements(r)) {
    CHECK(x.is_unit() == (valuation(x) == 0));
    for (const auto& y : galois_elements(r)) CHECK(norm(x * y) == norm(x) * norm(y));
  }
}

TEST_CASE("valuation of products") {
  auto z = make_cyclic_ring(5, 2);
  for (long a = 0; a < 25; ++a)
    for (long b = 0; b < 25; ++b) {
      auto x = CyclicElem::make(z, a), y = CyclicElem::make(z, b);
      CHECK(valuation(x * y) == std::min(valuation(x) + valuation(y), 2));
    }
  auto g = make_galois_ring(3, 2);
  for (const auto& x : galois_elements(g))
    for (const auto& y : galois_elements(g)) CHECK(valuation(x * y) == std::min(valuation(x) + valuation(y), 2));
}
