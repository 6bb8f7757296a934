#include "hallmod/hallconst.hpp"

#include "hallmod/error.hpp"
#include "hallmod/symfunc.hpp"

namespace hallmod {

namespace {

// All Λ-side work uses the formal s = q^{-1}.
LaurentRational s_pow(int e, const BigRational& c = 1) { return LaurentRational::monomial(c, e); }

LaurentRational to_q(const LaurentRational& f) { return f.substitute(-1, 1); }

const ParamMap kAltBasis{2, 1};
const ParamMap kHerBasis{1, -1};

SymPoly ring_image(Kind kind, const Partition& mu, int n) {
  switch (kind) {
    case Kind::Classical: return hl_p(mu, n) * s_pow(mu.nlambda());
    case Kind::Alternating:
      return pair_substitute(hl_p(mu, 2 * n), LaurentRational::var()) * s_pow(mu.nlambda() - mu.weight());
    case Kind::Hermitian: return hl_p(mu, n).map_param(kAltBasis).squared_variables() * s_pow(2 * mu.nlambda());
  }
  return SymPoly(n);
}

// Normalization of the image basis element, and the parameter of its P.
LaurentRational module_norm(Kind kind, const Partition& lambda) {
  switch (kind) {
    case Kind::Classical: return s_pow(lambda.nlambda());
    case Kind::Alternating: return s_pow(2 * lambda.nlambda());
    case Kind::Hermitian: return s_pow(lambda.nlambda(), lambda.nlambda() % 2 ? -1 : 1);
  }
  return 1;
}

ParamMap module_param(Kind kind) {
  switch (kind) {
    case Kind::Classical: return ParamMap::identity();
    case Kind::Alternating: return kAltBasis;
    case Kind::Hermitian: return kHerBasis;
  }
  return ParamMap::identity();
}

SymPoly module_image(Kind kind, const Partition& nu, int n) {
  return hl_p(nu, n).map_param(module_param(kind)) * module_norm(kind, nu);
}

int target_weight(Kind kind, const Partition& mu, const Partition& nu) {
  return (kind == Kind::Hermitian ? 2 : 1) * mu.weight() + nu.weight();
}

}  // namespace

BigRational StructureConstantTable::eval(const Partition& lambda, const BigRational& q) const {
  auto it = entries.find(lambda);
  return it == entries.end() ? BigRational(0) : it->second.eval(q);
}

StructureConstantTable symbolic_constants(Kind kind, const Partition& mu, const Partition& nu) {
  int n = target_weight(kind, mu, nu);
  if (n > kMaxSymbolicWeight)
    throw Error(ErrorCode::BoundExceeded, "weight " + std::to_string(n) + " exceeds " +
                                              std::to_string(kMaxSymbolicWeight));
  StructureConstantTable table{kind, mu, nu, {}};
  int vars = std::max(n, 1);
  SymPoly product = ring_image(kind, mu, vars) * module_image(kind, nu, vars);
  HLExpansion e = expand_in_hl(product, module_param(kind));
  for (const auto& [lambda, c] : e.coeffs) table.entries[lambda] = to_q(c / module_norm(kind, lambda));
  return table;
}

bool is_integer_polynomial(const LaurentRational& f) {
  if (!f.is_laurent_poly() || f.den() != LaurentPoly(1)) return false;
  for (const auto& [e, c] : f.num().terms())
    if (e < 0 || c.get_den() != 1) return false;
  return true;
}

std::vector<long> poly_coefficients(const LaurentRational& f) {
  if (!is_integer_polynomial(f)) throw Error(ErrorCode::InternalInconsistency, "not an integer polynomial in q");
  if (f.is_zero()) return {};
  std::vector<long> out(f.num().high_degree() + 1, 0);
  for (const auto& [e, c] : f.num().terms()) out[e] = c.get_num().get_si();
  return out;
}

long bruteforce_constant(Kind kind, const Partition& mu, const Partition& nu, const Partition& lambda, int p,
                         long size_bound) {
  if (kind == Kind::Classical) return count_G_classical(lambda, mu, nu, make_cyclic_ring(p, 1), size_bound);
  return count_G_paired(kind, lambda, mu, nu, p, size_bound);
}

VerifyReport verify_kind(Kind kind, int weight_bound, const std::vector<int>& primes, long size_bound) {
  VerifyReport report;
  report.kind = kind;
  int mu_scale = kind == Kind::Hermitian ? 2 : 1;
  for (const auto& mu : iterate({weight_bound / mu_scale, -1, -1})) {
    for (const auto& nu : iterate({weight_bound - mu_scale * mu.weight(), -1, -1})) {
      StructureConstantTable table = symbolic_constants(kind, mu, nu);
      for (const auto& [lambda, c] : table.entries) {
        if (!is_integer_polynomial(c)) report.mismatches.push_back({mu, nu, lambda, 0, "not polynomial: " + c.to_string("q"), 0});
      }
      for (const auto& lambda : partitions_of(target_weight(kind, mu, nu))) {
        for (int p : primes) {
          ++report.checks;
          BigRational sym = table.eval(lambda, p);
          long brute = bruteforce_constant(kind, mu, nu, lambda, p, size_bound);
          if (sym != brute) report.mismatches.push_back({mu, nu, lambda, p, to_string(sym), brute});
        }
      }
    }
  }
  return report;
}

bool check_associativity(Kind kind, const Partition& mu1, const Partition& mu2, const Partition& nu) {
  // Hermitian modules are over the quadratic extension, whose Hall algebra has parameter q².
  auto hall = [&](const Partition& a, const Partition& b) {
    auto t = symbolic_constants(Kind::Classical, a, b);
    if (kind == Kind::Hermitian)
      for (auto& [l, c] : t.entries) c = c.substitute(2, 1);
    return t.entries;
  };
  std::map<Partition, LaurentRational> lhs, rhs;
  for (const auto& [lambda, c1] : symbolic_constants(kind, mu1, nu).entries)
    for (const auto& [rho, c2] : symbolic_constants(kind, mu2, lambda).entries) lhs[rho] += c1 * c2;
  for (const auto& [kappa, c1] : hall(mu2, mu1))
    for (const auto& [rho, c2] : symbolic_constants(kind, kappa, nu).entries) rhs[rho] += c1 * c2;
  std::erase_if(lhs, [](const auto& kv) { return kv.second.is_zero(); });
  std::erase_if(rhs, [](const auto& kv) { return kv.second.is_zero(); });
  return lhs == rhs;
}

}  // namespace hallmod
