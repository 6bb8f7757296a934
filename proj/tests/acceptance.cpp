// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <string>

#include "hallmod/identities.hpp"

using namespace hallmod;

namespace {

std::string describe(const IdentityCheck& c) {
  std::string s = c.id;
  for (const auto& [k, v] : c.params) s += " " + k + "=" + v;
  s += ": " + c.lhs.substr(0, 40) + " vs " + c.rhs.substr(0, 40);
  if (!c.note.empty()) s += " (" + c.note + ")";
  return s;
}

bool criterion(int number, const std::string& title, const std::string& suite, const SuiteOptions& o,
               long min_checks = 1, const std::string& counted_id = "") {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<IdentityCheck> checks;
  std::string error;
  try {
    checks = run_suite(suite, o);
  } catch (const std::exception& e) {
    error = e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  long failed = 0, counted = 0;
  const IdentityCheck* first = nullptr;
  for (const auto& c : checks) {
    if (counted_id.empty() || c.id == counted_id) ++counted;
    if (!c.passed()) {
      ++failed;
      if (!first) first = &c;
    }
  }
  bool ok = error.empty() && failed == 0 && counted >= min_checks;
  std::printf("%s criterion %2d  %-44s %5zu checks, %ld failed, %.1fs", ok ? "PASS" : "FAIL", number, title.c_str(),
              checks.size(), failed, secs);
  if (!error.empty()) std::printf("; error: %s", error.c_str());
  if (counted < min_checks) std::printf("; only %ld of %ld required checks", counted, min_checks);
  if (first) std::printf("; first failure %s", describe(*first).c_str());
  std::printf("\n");
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main() {
  bool all = true;
  SuiteOptions o;

  o = {};
  o.weight = 4;
  o.primes = {2, 3};
  all &= criterion(1, "classical Hall isomorphism", "classical-hall", o);

  o = {};
  o.weight = 3;
  o.primes = {2, 3};
  all &= criterion(2, "alternating Hall module", "thm1.1-alt", o);

  o = {};
  o.weight = 3;
  o.primes = {3, 5};
  o.size_bound = 20000;
  all &= criterion(3, "Hermitian Hall module", "thm1.1-her", o);

  o = {};
  o.weight = 6;
  all &= criterion(4, "sum of skew", "lemma5.3", o, 4 * 18 * 18, "sum-of-skew");

  o = {};
  o.weight = 6;
  all &= criterion(5, "q-binomial lemma and conjugate identity", "appendixA", o);

  o = {};
  o.weight = 6;
  o.L = 14;
  o.tol = 1e-6;
  all &= criterion(6, "u-probability closed forms and masses", "thm5.1", o);

  o = {};
  o.weight = 2;
  all &= criterion(7, "automorphism counts", "thm5.4-aut", o);

  o = {};
  o.weight = 3;
  o.primes = {3};
  all &= criterion(8, "norm-sphere counts", "lemma5.2", o);

  o = {};
  o.primes = {3};
  o.L = 16;
  o.tol = 1e-5;
  all &= criterion(9, "Hom moments", "thm1.2", o);

  o = {};
  o.L = 14;
  o.tol = 1e-5;
  all &= criterion(10, "Hall-Littlewood measure moments", "prop1.3", o);

  o = {};
  o.weight = 5;
  all &= criterion(11, "engine self-consistency", "engine", o);

  return all ? 0 : 1;
}
