#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hallmod/error.hpp"
#include "hallmod/hallconst.hpp"

using namespace hallmod;

namespace {

LaurentRational q() { return LaurentRational::var(); }

std::string show(const VerifyReport& r) {
  std::string s;
  for (const auto& m : r.mismatches)
    s += m.mu.to_string() + " " + m.nu.to_string() + " -> " + m.lambda.to_string() + " p=" + std::to_string(m.p) +
         " symbolic " + m.symbolic + " brute " + std::to_string(m.brute) + "\n";
  return s;
}

}  // namespace

TEST_CASE("symbolic examples") {
  auto c = symbolic_constants(Kind::Classical, Partition{1}, Partition{1});
  CHECK(c.entries.size() == 2);
  CHECK(c.entries[Partition{2}] == LaurentRational(1));
  CHECK(c.entries[Partition{1, 1}] == q() + 1);

  auto a = symbolic_constants(Kind::Alternating, Partition{1}, Partition());
  CHECK(a.entries.size() == 1);
  CHECK(a.entries[Partition{1}] == q() + 1);

  auto h = symbolic_constants(Kind::Hermitian, Partition{1}, Partition());
  CHECK(h.entries.size() == 2);
  CHECK(h.entries[Partition{2}] == LaurentRational(1));
  CHECK(h.entries[Partition{1, 1}] == q() + 1);
  CHECK(poly_coefficients(h.entries[Partition{1, 1}]) == std::vector<long>{1, 1});
}

TEST_CASE("bruteforce examples") {
  CHECK(bruteforce_constant(Kind::Classical, Partition{1}, Partition{1}, Partition{1, 1}, 5) == 6);
  CHECK(bruteforce_constant(Kind::Alternating, Partition{1}, Partition(), Partition{1}, 5) == 6);
  CHECK(bruteforce_constant(Kind::Hermitian, Partition{1}, Partition(), Partition{1, 1}, 5, 20000) == 6);
}

TEST_CASE("identity action") {
  for (Kind k : {Kind::Classical, Kind::Alternating, Kind::Hermitian}) {
    for (const auto& nu : iterate({4, -1, -1})) {
      auto t = symbolic_constants(k, Partition(), nu);
      CHECK(t.entries.size() == 1);
      CHECK(t.entries[nu] == LaurentRational(1));
    }
  }
}

TEST_CASE("columns generate") {
  // u_(1) u_(1^r) = u_(2,1^{r-1}) + (1 + q + ... + q^r) u_(1^{r+1})
  for (int r = 1; r <= 2; ++r) {
    auto t = symbolic_constants(Kind::Classical, Partition{1}, Partition(std::vector<int>(r, 1)));
    std::vector<int> hook(r, 1);
    hook[0] = 2;
    LaurentRational geo;
    for (int i = 0; i <= r; ++i) geo += q().pow(i);
    CHECK(t.entries[Partition(hook)] == LaurentRational(1));
    CHECK(t.entries[Partition(std::vector<int>(r + 1, 1))] == geo);
  }
}

TEST_CASE("entries are integer polynomials with the weight constraint") {
  for (Kind k : {Kind::Classical, Kind::Alternating, Kind::Hermitian}) {
    int scale = k == Kind::Hermitian ? 2 : 1;
    for (const auto& mu : iterate({2, -1, -1})) {
      for (const auto& nu : iterate({4 - scale * mu.weight(), -1, -1})) {
        for (const auto& [l, c] : symbolic_constants(k, mu, nu).entries) {
          CHECK(is_integer_polynomial(c));
          CHECK(l.weight() == scale * mu.weight() + nu.weight());
        }
      }
    }
  }
}

TEST_CASE("bound") {
  try {
    symbolic_constants(Kind::Classical, Partition{5}, Partition{4});
    FAIL("expected BoundExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BoundExceeded);
  }
}

TEST_CASE("verify against brute force") {
  auto c = verify_kind(Kind::Classical, 3, {2, 3});
  CHECK_MESSAGE(c.ok(), show(c));
  CHECK(c.checks > 0);
  auto a = verify_kind(Kind::Alternating, 2, {2, 3});
  CHECK_MESSAGE(a.ok(), show(a));
  auto h = verify_kind(Kind::Hermitian, 2, {3});
  CHECK_MESSAGE(h.ok(), show(h));
}

TEST_CASE("associativity through the module") {
  for (Kind k : {Kind::Classical, Kind::Alternating, Kind::Hermitian}) {
    int scale = k == Kind::Hermitian ? 2 : 1;
    for (const auto& m1 : iterate({3, -1, -1}))
      for (const auto& m2 : iterate({3 - m1.weight(), -1, -1}))
        for (const auto& nu : iterate({3 - m1.weight() - m2.weight(), -1, -1})) {
          if (scale * (m1.weight() + m2.weight()) + nu.weight() > kMaxSymbolicWeight) continue;
          CHECK_MESSAGE(check_associativity(k, m1, m2, nu),
                        to_string(k) << " " << m1.to_string() << " " << m2.to_string() << " " << nu.to_string());
        }
  }
}
