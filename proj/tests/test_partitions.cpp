#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hallmod/error.hpp"
#include "hallmod/partitions.hpp"

using namespace hallmod;

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition()) == Partition());
  CHECK(conjugate(Partition{2, 1}) == Partition{2, 1});
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
}

TEST_CASE("trailing zeros are stripped") {
  CHECK(Partition(std::vector<int>{2, 1, 0, 0}) == Partition{2, 1});
  CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), Error);
}

TEST_CASE("weight, n and multiplicities") {
  auto w = weight_n_mult(Partition());
  CHECK(w.weight == 0);
  CHECK(w.nlambda == 0);
  CHECK(w.multiplicities.empty());

  w = weight_n_mult(Partition{2, 2, 1});
  CHECK(w.weight == 5);
  CHECK(w.nlambda == 4);
  CHECK(w.multiplicities == std::map<int, int>{{2, 2}, {1, 1}});

  w = weight_n_mult(Partition{3, 1});
  CHECK(w.weight == 4);
  CHECK(w.nlambda == 1);
  CHECK(w.multiplicities == std::map<int, int>{{3, 1}, {1, 1}});
}

TEST_CASE("conj_dot") {
  CHECK(conj_dot(Partition(), Partition{3, 2}) == 0);
  CHECK(conj_dot(Partition{2, 1}, Partition{1, 1}) == 4);
  CHECK(conj_dot(Partition{3}, Partition{2}) == 2);
}

TEST_CASE("double and halve") {
  CHECK(double_interleave(Partition{2, 1}) == Partition{2, 2, 1, 1});
  CHECK(halve_doubled(Partition{2, 2, 1, 1}) == Partition{2, 1});
  try {
    halve_doubled(Partition{2, 1});
    FAIL("expected NotDoubled");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDoubled);
  }
}

TEST_CASE("iterate order and counts") {
  auto a = iterate({2, -1, -1});
  REQUIRE(a.size() == 4);
  CHECK(a[0] == Partition());
  CHECK(a[1] == Partition{1});
  CHECK(a[2] == Partition{2});
  CHECK(a[3] == Partition{1, 1});

  auto b = iterate({3, -1, 1});
  REQUIRE(b.size() == 4);
  CHECK(b[3] == Partition{3});

  CHECK(iterate({5, -1, -1}).size() == 19);  // 1+1+2+3+5+7
  // the first few partition numbers, each from its own enumeration
  const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int w = 0; w <= 8; ++w) CHECK(partitions_of(w).size() == static_cast<std::size_t>(p[w]));
}

TEST_CASE("box iteration yields each partition once") {
  auto all = iterate({-1, 3, 3});
  std::set<Partition> seen(all.begin(), all.end());
  CHECK(seen.size() == all.size());
  CHECK(all.size() == 20);  // C(6,3) partitions fit a 3x3 box
}

TEST_CASE("partition invariants up to weight 8") {
  for (const auto& l : iterate({8, -1, -1})) {
    Partition c = conjugate(l);
    CHECK(conjugate(c) == l);
    CHECK(c.weight() == l.weight());
    int n = 0;
    for (int i = 0; i < c.length(); ++i) n += c[i] * (c[i] - 1) / 2;
    CHECK(n == l.nlambda());
    for (int k = 1; k <= l.largest(); ++k) CHECK(l.multiplicity(k) == c[k - 1] - c[k]);
  }
}

TEST_CASE("conj_dot symmetry and min formula") {
  auto ps = iterate({6, -1, -1});
  for (const auto& l : ps) {
    for (const auto& v : ps) {
      int direct = 0;
      for (int a : l.parts())
        for (int b : v.parts()) direct += std::min(a, b);
      CHECK(conj_dot(l, v) == direct);
      CHECK(conj_dot(v, l) == direct);
    }
    CHECK(halve_doubled(double_interleave(l)) == l);
  }
}

TEST_CASE("horizontal strips") {
  auto s = remove_horizontal_strip(Partition{2, 1}, 1);
  std::set<Partition> got(s.begin(), s.end());
  CHECK(got == std::set<Partition>{Partition{1, 1}, Partition{2}});
  CHECK(remove_horizontal_strip(Partition{1, 1}, 2).empty());
  CHECK(remove_horizontal_strip(Partition{3}, 3).size() == 1);
}

TEST_CASE("parse") {
  CHECK(parse_partition("") == Partition());
  CHECK(parse_partition("2,1") == Partition{2, 1});
  CHECK_THROWS_AS(parse_partition("1,2"), Error);
  CHECK_THROWS_AS(parse_partition("a"), Error);
}
